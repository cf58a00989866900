#include "forge/groupcore.hpp"

#include <json.hpp>
#include <numeric>
#include <sstream>

namespace forge {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ',';
      os << j + 1;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch(a.degree(), b.degree());
  std::vector<int> images(a.degree());
  for (int i = 0; i < a.degree(); ++i) images[i] = b[a[i]];
  return Perm(std::move(images));
}

Perm inverse(const Perm& a) {
  std::vector<int> images(a.degree());
  for (int i = 0; i < a.degree(); ++i) images[a[i]] = i;
  return Perm(std::move(images));
}

Perm identity_like(const Perm& a) { return Perm::identity(a.degree()); }

std::size_t hash_value(const Perm& p) {
  std::size_t h = static_cast<std::size_t>(p.degree());
  for (int x : p.images()) h = h * 1000003u + static_cast<std::size_t>(x);
  return h;
}

// ---------------------------------------------------------------------------

Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("word letters are 1-based");
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word repeat_word(const Word& w, int times) {
  Word base = times < 0 ? inverse_word(w) : w;
  Word out;
  for (int k = 0; k < std::abs(times); ++k) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    const auto k = static_cast<std::size_t>(std::abs(w[i]));
    if (k - 1 < names.size()) {
      os << names[k - 1];
    } else {
      os << 'g' << k;
    }
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

Presentation Presentation::make(int generators, std::vector<Word> relators, std::vector<std::string> names) {
  Presentation p;
  p.generators = generators;
  for (auto& r : relators) {
    for (int letter : r) {
      if (letter == 0 || std::abs(letter) > generators) throw std::invalid_argument("relator letter out of range");
    }
    p.relators.push_back(free_reduce(r));
  }
  if (names.empty()) {
    for (int i = 0; i < generators; ++i) names.push_back("g" + std::to_string(i + 1));
  }
  if (static_cast<int>(names.size()) != generators) throw std::invalid_argument("wrong number of names");
  p.names = std::move(names);
  return p;
}

std::string Presentation::to_json() const {
  nlohmann::json j;
  j["generators"] = generators;
  j["relators"] = relators;
  j["names"] = names;
  return j.dump();
}

Presentation Presentation::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return make(j.at("generators").get<int>(), j.at("relators").get<std::vector<Word>>(), std::move(names));
}

// ---------------------------------------------------------------------------

std::set<PointVec> orbit(const ConcreteGroup& g, const PointVec& p) {
  std::set<PointVec> seen{p};
  std::vector<PointVec> frontier{p};
  while (!frontier.empty()) {
    PointVec x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : g.generators()) {
      PointVec y = act(x, s);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen;
}

ConcreteGroup stabilizer(const ConcreteGroup& g, const PointVec& p) {
  std::vector<SignedPerm> fixing;
  for (const auto& x : g.elements()) {
    if (act(p, x) == p) fixing.push_back(x);
  }
  return ConcreteGroup::from_elements(std::move(fixing));
}

ConcreteGroup setwise_stabilizer(const ConcreteGroup& g, const std::set<PointVec>& s) {
  std::vector<SignedPerm> keep;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& p : s) {
      if (!s.count(act(p, x))) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(x);
  }
  return ConcreteGroup::from_elements(std::move(keep));
}

}  // namespace forge
