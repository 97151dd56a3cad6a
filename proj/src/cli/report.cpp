#include "gvz/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gvz::report {

namespace {

std::string fixed(double v) {
  if (std::fabs(v) < 5e-7) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

const char* status_word(Check::Status s) {
  switch (s) {
    case Check::Status::Pass: return "PASS";
    case Check::Status::Fail: return "FAIL";
    case Check::Status::Skip: return "SKIP";
    case Check::Status::Info: return "INFO";
  }
  return "?";
}

}  // namespace

std::string decimal(const Cyclotomic& value) {
  const auto z = value.approximate();
  const std::string re = fixed(z.real());
  const std::string im = fixed(z.imag());
  if (im == "0.000000") return re;
  return re + (im.front() == '-' ? " - " + im.substr(1) : " + " + im) + "i";
}

Json table_json(const CharacterTable& table, bool decimal_values) {
  const auto& cd = *table.classes;
  const GroupPtr& g = table.group;
  Json classes = Json::array();
  for (int c = 0; c < cd.count(); ++c) {
    const Element rep = cd.classes.representatives[c];
    classes.push_back({{"index", c},
                       {"representative", g->word(rep)},
                       {"size", cd.size(c)},
                       {"element_order", g->element_order(rep)},
                       {"centralizer_order", cd.centralizer_order[c]}});
  }
  Json characters = Json::array();
  for (int i = 0; i < table.size(); ++i) {
    Json values = Json::array();
    Json approx = Json::array();
    for (const auto& v : table[i].values()) {
      values.push_back(v.to_string());
      if (decimal_values) approx.push_back(decimal(v));
    }
    Json row{{"index", i}, {"degree", table[i].degree()}, {"values", std::move(values)}};
    if (decimal_values) row["approximate_values"] = std::move(approx);
    characters.push_back(std::move(row));
  }
  return Json{{"order", g->order()},
              {"exponent", table.exponent},
              {"field_prime", table.field_prime},
              {"value_notation", "z = exp(2*pi*i/" + std::to_string(table.exponent) + ")"},
              {"classes", std::move(classes)},
              {"characters", std::move(characters)}};
}

Json gvz_json(const GvzReport& r) {
  Json rows = Json::array();
  for (const auto& c : r.characters) {
    rows.push_back({{"index", c.index},
                    {"degree", c.degree},
                    {"center_order", c.center_order},
                    {"degree_square_is_index", c.degree_square_is_index},
                    {"vanishes_off_center", c.vanishes_off_center}});
  }
  Json out{{"is_nonabelian", r.is_nonabelian},
           {"degree_set", r.degree_set},
           {"is_gvz", r.is_gvz},
           {"criteria_agree", r.criteria_agree()},
           {"characters", std::move(rows)}};
  out["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return out;
}

Json gcp_json(const GcpResult& r, const std::string& normal_description) {
  Json out{{"normal_subgroup", normal_description},
           {"holds", r.holds},
           {"vanishing_criterion", r.vanishing_criterion},
           {"class_criterion", r.class_criterion}};
  out["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return out;
}

Json theorem_json(const TheoremReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"label", c.label},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"status", to_string(c.status)},
                      {"witnesses", c.witnesses}});
  }
  return Json{{"theorem", r.theorem},
              {"passed", r.passed()},
              {"counts",
               {{"pass", r.count(Check::Status::Pass)},
                {"fail", r.count(Check::Status::Fail)},
                {"skip", r.count(Check::Status::Skip)},
                {"info", r.count(Check::Status::Info)}}},
              {"checks", std::move(checks)}};
}

std::string table_text(const CharacterTable& table, bool decimal_values) {
  const auto& cd = *table.classes;
  const GroupPtr& g = table.group;
  std::ostringstream out;
  out << "order " << g->order() << ", " << cd.count() << " classes, exponent " << table.exponent
      << ", z = exp(2*pi*i/" << table.exponent << ")\n";
  out << "classes:\n";
  for (int c = 0; c < cd.count(); ++c) {
    const Element rep = cd.classes.representatives[c];
    out << "  C" << c << "  rep " << g->word(rep) << "  size " << cd.size(c) << "  order "
        << g->element_order(rep) << "\n";
  }
  out << "characters:\n";
  for (int i = 0; i < table.size(); ++i) {
    out << "  chi[" << i << "]  degree " << table[i].degree() << "\n";
    for (int c = 0; c < cd.count(); ++c) {
      out << "    C" << c << ": " << table[i].at_class(c).to_string();
      if (decimal_values) out << "   (approx. " << decimal(table[i].at_class(c)) << ")";
      out << "\n";
    }
  }
  return out.str();
}

std::string gvz_text(const GvzReport& r) {
  std::ostringstream out;
  out << "GVZ: " << (r.is_gvz ? "yes" : "no") << "\n";
  out << "cd(G) = {";
  for (std::size_t i = 0; i < r.degree_set.size(); ++i) out << (i ? ", " : "") << r.degree_set[i];
  out << "}\n";
  for (const auto& c : r.characters) {
    out << "  chi[" << c.index << "]  degree " << c.degree << "  |Z(chi)| " << c.center_order
        << "  chi(1)^2 = |G:Z(chi)| " << (c.degree_square_is_index ? "yes" : "no")
        << "  vanishes off Z(chi) " << (c.vanishes_off_center ? "yes" : "no") << "\n";
  }
  out << "criteria agree for every character: " << (r.criteria_agree() ? "yes" : "no") << "\n";
  if (r.witness) out << "witness: " << *r.witness << "\n";
  return out.str();
}

std::string theorem_text(const TheoremReport& r) {
  std::ostringstream out;
  out << "[" << r.theorem << "] " << (r.passed() ? "PASS" : "FAIL") << "  (" << r.count(Check::Status::Pass)
      << " pass, " << r.count(Check::Status::Fail) << " fail, " << r.count(Check::Status::Skip) << " skip, "
      << r.count(Check::Status::Info) << " info)\n";
  for (const auto& c : r.checks) {
    out << "  " << status_word(c.status) << "  " << c.label << "\n";
    out << "        " << c.lhs;
    if (!c.rhs.empty()) out << "  |  " << c.rhs;
    out << "\n";
    for (const auto& w : c.witnesses) out << "        witness: " << w << "\n";
  }
  return out.str();
}

}  // namespace gvz::report
