#include "grograde/partial_bijection.hpp"

#include <algorithm>
#include <set>

namespace grograde {

std::vector<std::string> PartialBijection::dom_elems() const {
  std::vector<std::string> out;
  for (const auto& [a, b] : map) out.push_back(a);
  return out;
}

std::vector<std::string> PartialBijection::img_elems() const {
  std::vector<std::string> out;
  for (const auto& [a, b] : map) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

static void check_set(const FinSet& s) {
  check(std::is_sorted(s.elems.begin(), s.elems.end()) &&
            std::adjacent_find(s.elems.begin(), s.elems.end()) ==
                s.elems.end(),
        "BadSet", "set elements must be sorted and distinct: " + s.id);
}

PartialBijection make_pb(
    const FinSet& src, const FinSet& dst,
    std::vector<std::pair<std::string, std::string>> map) {
  check_set(src);
  check_set(dst);
  std::sort(map.begin(), map.end());
  std::set<std::string> seen_img;
  for (size_t i = 0; i < map.size(); ++i) {
    if (i) check(map[i].first != map[i - 1].first, "NotInjective",
                 "repeated domain element " + map[i].first);
    check(std::binary_search(src.elems.begin(), src.elems.end(), map[i].first),
          "BadReference", "domain element not in source: " + map[i].first);
    check(std::binary_search(dst.elems.begin(), dst.elems.end(), map[i].second),
          "BadReference", "image element not in target: " + map[i].second);
    check(seen_img.insert(map[i].second).second, "NotInjective",
          "repeated image element " + map[i].second);
  }
  return PartialBijection{src, dst, std::move(map)};
}

PartialBijection zero_pb(const FinSet& src, const FinSet& dst) {
  return make_pb(src, dst, {});
}

bool is_zero_pb(const PartialBijection& f) { return f.map.empty(); }

PartialBijection compose_pb(const PartialBijection& f,
                            const PartialBijection& g) {
  if (!(g.dst == f.src)) return zero_pb(g.src, f.dst);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [x, y] : g.map)
    for (const auto& [a, b] : f.map)
      if (y == a) out.push_back({x, b});
  return make_pb(g.src, f.dst, std::move(out));
}

PartialBijection star_pb(const PartialBijection& f) {
  std::vector<std::pair<std::string, std::string>> rev;
  for (const auto& [a, b] : f.map) rev.push_back({b, a});
  return make_pb(f.dst, f.src, std::move(rev));
}

bool pb_eq(const PartialBijection& a, const PartialBijection& b) {
  return a == b;
}

std::vector<PartialBijection> enumerate_pbs(const FinSet& src,
                                            const FinSet& dst) {
  check_set(src);
  check_set(dst);
  std::vector<PartialBijection> out;
  std::vector<std::pair<std::string, std::string>> cur;
  std::vector<char> used(dst.elems.size(), 0);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == src.elems.size()) {
      out.push_back(PartialBijection{src, dst, cur});
      return;
    }
    self(self, i + 1);  // leave src.elems[i] unmapped
    for (size_t j = 0; j < dst.elems.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      cur.push_back({src.elems[i], dst.elems[j]});
      self(self, i + 1);
      cur.pop_back();
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

static std::string describe(const PartialBijection& f) {
  std::string s = f.src.id + "->" + f.dst.id + "{";
  for (const auto& [a, b] : f.map) s += a + ":" + b + ",";
  s += "}";
  return s;
}

InverseCategoryReport check_inverse_category(
    const std::vector<PartialBijection>& family,
    const InverseCategoryOptions& opt, Rng& rng) {
  InverseCategoryReport rep;
  auto assoc_one = [&](const PartialBijection& f, const PartialBijection& g,
                       const PartialBijection& h) {
    PartialBijection l = compose_pb(compose_pb(f, g), h);
    PartialBijection r = compose_pb(f, compose_pb(g, h));
    ++rep.triples_checked;
    if (!pb_eq(l, r) && rep.ok) {
      rep.ok = false;
      rep.counterexample = "associativity: " + describe(f) + " " + describe(g) +
                           " " + describe(h);
    }
  };
  if (opt.exhaustive_triples) {
    for (const auto& f : family)
      for (const auto& g : family)
        for (const auto& h : family) assoc_one(f, g, h);
  }
  for (size_t t = 0; t < opt.random_triples; ++t) {
    const auto& f = family[rng.next(family.size())];
    const auto& g = family[rng.next(family.size())];
    const auto& h = family[rng.next(family.size())];
    assoc_one(f, g, h);
  }
  for (const auto& f : family) {
    PartialBijection fs = star_pb(f);
    ++rep.star_checked;
    if ((!pb_eq(compose_pb(compose_pb(f, fs), f), f) ||
         !pb_eq(compose_pb(compose_pb(fs, f), fs), fs)) &&
        rep.ok) {
      rep.ok = false;
      rep.counterexample = "star laws: " + describe(f);
    }
  }
  if (opt.uniqueness) {
    for (const auto& f : family)
      for (const auto& h : family) {
        if (!(h.src == f.dst) || !(h.dst == f.src)) continue;
        ++rep.uniqueness_pairs;
        bool gen = pb_eq(compose_pb(compose_pb(f, h), f), f) &&
                   pb_eq(compose_pb(compose_pb(h, f), h), h);
        if (gen && !pb_eq(h, star_pb(f)) && rep.ok) {
          rep.ok = false;
          rep.counterexample =
              "generalized inverse not unique: " + describe(f) + " vs " +
              describe(h);
        }
      }
  }
  return rep;
}

}  // namespace grograde
