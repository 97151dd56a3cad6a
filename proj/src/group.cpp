#include "gvz/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gvz/errors.hpp"

namespace gvz {

GroupPtr Group::enumerate(std::shared_ptr<const Representation> rep, std::vector<Label> generators,
                          std::vector<std::string> generator_names,
                          const EnumerationOptions& options) {
  if (generator_names.size() != generators.size()) {
    throw InputError("generator name count does not match generator count");
  }
  auto group = std::shared_ptr<Group>(new Group());
  Group& g = *group;
  g.rep_ = std::move(rep);
  g.generator_names_ = std::move(generator_names);

  // Breadth-first closure under right multiplication by generators.
  g.labels_.push_back(g.rep_->identity());
  g.index_.emplace(g.labels_.front(), 0);
  g.words_.emplace_back("1");
  for (std::size_t head = 0; head < g.labels_.size(); ++head) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Label next = g.rep_->multiply(g.labels_[head], generators[k]);
      if (g.index_.contains(next)) continue;
      if (g.labels_.size() >= options.max_order) {
        std::ostringstream msg;
        msg << "group closure exceeds the configured cap of " << options.max_order << " elements";
        throw ResourceError(msg.str());
      }
      g.index_.emplace(next, static_cast<Element>(g.labels_.size()));
      g.labels_.push_back(std::move(next));
      g.words_.push_back(head == 0 ? g.generator_names_[k]
                                   : g.words_[head] + "*" + g.generator_names_[k]);
    }
  }

  for (const Label& gen : generators) g.generators_.push_back(g.index_.at(gen));

  const auto n = static_cast<std::size_t>(g.order());
  if (n <= options.dense_table_limit) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = g.index_.find(g.rep_->multiply(g.labels_[a], g.labels_[b]));
        if (it == g.index_.end()) throw InternalError("representation is not closed");
        g.table_[a * n + b] = it->second;
      }
    }
  }

  g.element_order_.assign(n, 0);
  g.inverse_.assign(n, 0);
  long long exponent = 1;
  for (Element a = 0; a < g.order(); ++a) {
    int ord = 1;
    Element prev = 0;
    Element x = a;
    while (x != 0) {
      prev = x;
      x = g.multiply(x, a);
      ++ord;
    }
    g.element_order_[a] = ord;
    g.inverse_[a] = (a == 0) ? 0 : prev;
    exponent = std::lcm(exponent, static_cast<long long>(ord));
  }
  g.exponent_ = static_cast<int>(exponent);
  return group;
}

Element Group::multiply(Element a, Element b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * labels_.size() + b];
  return index_.at(rep_->multiply(labels_[a], labels_[b]));
}

Element Group::power(Element a, long long k) const {
  const int ord = element_order_[a];
  k %= ord;
  if (k < 0) k += ord;
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

Element Group::conjugate(Element x, Element g) const { return multiply(multiply(inverse(g), x), g); }

Element Group::commutator(Element h, Element k) const {
  return multiply(multiply(inverse(h), inverse(k)), multiply(h, k));
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (multiply(generators_[i], generators_[j]) != multiply(generators_[j], generators_[i])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Element> Group::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

Permutation permutation_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) throw InputError("permutation degree must be positive");
  Permutation images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int point = cycle[i];
      if (point < 1 || point > degree) {
        std::ostringstream msg;
        msg << "point " << point << " outside {1.." << degree << "}";
        throw InputError(msg.str());
      }
      if (seen[point - 1]) {
        std::ostringstream msg;
        msg << "point " << point << " repeated in cycle notation; not a bijection";
        throw InputError(msg.str());
      }
      seen[point - 1] = true;
      images[point - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return images;
}

Label PermutationRepresentation::multiply(const Label& a, const Label& b) const {
  Label out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Label PermutationRepresentation::identity() const {
  Label id(static_cast<std::size_t>(degree_));
  std::iota(id.begin(), id.end(), 0);
  return id;
}

GroupPtr enumerate_from_permutations(int degree, const std::vector<Permutation>& generators,
                                     const EnumerationOptions& options) {
  if (degree < 1) throw InputError("permutation degree must be positive");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Permutation& perm = generators[k];
    if (perm.size() != static_cast<std::size_t>(degree)) {
      throw InputError("permutation generator has the wrong degree");
    }
    std::vector<bool> hit(perm.size(), false);
    for (int image : perm) {
      if (image < 0 || image >= degree || hit[image]) {
        throw InputError("permutation generator " + std::to_string(k + 1) + " is not a bijection");
      }
      hit[image] = true;
    }
    names.push_back("g" + std::to_string(k + 1));
  }
  return Group::enumerate(std::make_shared<PermutationRepresentation>(degree),
                          std::vector<Label>(generators.begin(), generators.end()), std::move(names),
                          options);
}

}  // namespace gvz
