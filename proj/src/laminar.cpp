#include "ultraball/laminar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ultraball/ballean.hpp"

namespace ub {

SetFamily::SetFamily(std::vector<std::string> universe_,
                     std::vector<std::vector<int>> family_)
    : universe(std::move(universe_)), family(std::move(family_)) {
  if (universe.empty())
    throw Error("empty-universe", "family universe must be nonempty");
  std::set<std::string> names(universe.begin(), universe.end());
  if (names.size() != universe.size())
    throw Error("duplicate-point", "duplicate point in family universe");
  int n = static_cast<int>(universe.size());
  for (auto& member : family) {
    if (member.empty())
      throw Error("empty-member", "family members must be nonempty");
    std::sort(member.begin(), member.end());
    member.erase(std::unique(member.begin(), member.end()), member.end());
    for (int i : member)
      if (i < 0 || i >= n)
        throw Error("unknown-point", "family member index out of range");
  }
  std::sort(family.begin(), family.end());
  for (std::size_t i = 1; i < family.size(); ++i)
    if (family[i] == family[i - 1])
      throw Error("duplicate-member", "duplicate family member");
}

FamilyReport validate_family(const SetFamily& f) {
  FamilyReport rep;
  int n = static_cast<int>(f.universe.size());
  std::set<std::vector<int>> members(f.family.begin(), f.family.end());

  std::vector<int> whole(n);
  for (int i = 0; i < n; ++i) whole[i] = i;
  rep.missing_universe = members.count(whole) == 0;
  for (int i = 0; i < n; ++i)
    if (members.count({i}) == 0) rep.missing_singletons.push_back(i);

  int m = static_cast<int>(f.family.size());
  for (int i = 0; i < m && !rep.crossing_pair; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& a = f.family[i];
      const auto& b = f.family[j];
      std::vector<int> inter;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(inter));
      if (inter.empty()) continue;
      bool nested = inter.size() == a.size() || inter.size() == b.size();
      if (!nested) {
        rep.crossing_pair = {i, j};
        break;
      }
    }

  rep.is_ballean = !rep.missing_universe && rep.missing_singletons.empty() &&
                   !rep.crossing_pair;
  return rep;
}

Space reconstruct(const SetFamily& f) {
  FamilyReport rep = validate_family(f);
  if (!rep.is_ballean) {
    std::string witness = "{\"missing_universe\":";
    witness += rep.missing_universe ? "true" : "false";
    witness += ",\"missing_singletons\":" +
               std::to_string(rep.missing_singletons.size());
    witness += ",\"has_crossing\":";
    witness += rep.crossing_pair ? "true" : "false";
    witness += "}";
    throw Error("not-a-ballean", "family is not the ballean of any ultrametric",
                Error::Kind::domain, witness);
  }
  int n = static_cast<int>(f.universe.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      std::size_t smallest = f.universe.size() + 1;
      for (const auto& member : f.family)
        if (std::binary_search(member.begin(), member.end(), x) &&
            std::binary_search(member.begin(), member.end(), y))
          smallest = std::min(smallest, member.size());
      m[x][y] = m[y][x] = Rat(static_cast<long long>(smallest) - 1);
    }
  return Space(f.universe, std::move(m));
}

SetFamily family_of(const Space& space) {
  std::vector<Ball> balls = enumerate_balls(space);
  std::vector<std::vector<int>> members;
  members.reserve(balls.size());
  for (const Ball& b : balls) members.push_back(b.members);
  return SetFamily(space.points(), std::move(members));
}

bool same_family(const SetFamily& a, const SetFamily& b) {
  std::set<std::string> ua(a.universe.begin(), a.universe.end());
  std::set<std::string> ub_(b.universe.begin(), b.universe.end());
  if (ua != ub_) return false;
  auto named = [](const SetFamily& f) {
    std::set<std::set<std::string>> out;
    for (const auto& member : f.family) {
      std::set<std::string> names;
      for (int i : member) names.insert(f.universe[i]);
      out.insert(std::move(names));
    }
    return out;
  };
  return named(a) == named(b);
}

}  // namespace ub
