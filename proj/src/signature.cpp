#include "tropid/signature.hpp"

#include <stdexcept>

namespace tropid {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// prefix[i*m + s] = occurrences of s in w[0, i)
std::vector<int> prefix_counts(const Word& w) {
  const std::size_t m = static_cast<std::size_t>(w.alphabet_size());
  std::vector<int> c((w.size() + 1) * m, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t s = 0; s < m; ++s) c[(i + 1) * m + s] = c[i * m + s];
    ++c[(i + 1) * m + w[i]];
  }
  return c;
}

class TupleScan {
 public:
  TupleScan(const Word& w, int d) : w_(w), d_(d), m_(w.alphabet_size()), prefix_(prefix_counts(w)),
        buf_(static_cast<std::size_t>(m_ * d), 0) {}

  // Calls emit(u_index, exponent_vector) for every position d-tuple whose
  // letters spell a word accepted by `accept(depth, letter)`.
  template <class Accept, class Emit>
  void run(Accept&& accept, Emit&& emit) {
    rec(0, 0, 0, accept, emit);
  }

 private:
  template <class Accept, class Emit>
  void rec(int depth, std::size_t start, std::size_t uidx, Accept& accept, Emit& emit) {
    const std::size_t m = static_cast<std::size_t>(m_);
    const std::size_t remaining = static_cast<std::size_t>(d_ - depth);
    if (w_.size() < remaining) return;
    for (std::size_t pos = start; pos + remaining <= w_.size(); ++pos) {
      const Letter l = w_[pos];
      if (!accept(depth, l)) continue;
      Coord* block = buf_.data() + static_cast<std::size_t>(depth) * m;
      // letters strictly between the previous chosen position (start - 1) and pos
      for (std::size_t s = 0; s < m; ++s) block[s] = prefix_[pos * m + s] - prefix_[start * m + s];
      const std::size_t next = uidx * m + l;
      if (depth + 1 == d_) emit(next, PointView(buf_));
      else rec(depth + 1, pos + 1, next, accept, emit);
    }
  }

  const Word& w_;
  int d_, m_;
  std::vector<int> prefix_;
  std::vector<Coord> buf_;
};

}  // namespace

std::string subword_label(std::size_t index, int m, int d) {
  std::string s(static_cast<std::size_t>(d), 'a');
  for (int k = d - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = static_cast<char>('a' + index % static_cast<std::size_t>(m));
    index /= static_cast<std::size_t>(m);
  }
  return s;
}

PointSet support_points(const Word& w, const Word& u) {
  if (u.empty()) throw std::invalid_argument("support_points: empty subword");
  if (u.alphabet_size() != w.alphabet_size()) throw std::invalid_argument("support_points: alphabet mismatch");
  const int d = static_cast<int>(u.size());
  PointSet out(w.alphabet_size() * d);
  TupleScan scan(w, d);
  scan.run([&](int depth, Letter l) { return u[static_cast<std::size_t>(depth)] == l; },
           [&](std::size_t, PointView p) { out.push_back(p); });
  out.canonicalize();
  return out;
}

std::vector<PointSet> degree_supports(const Word& w, int d) {
  if (d < 1) throw std::invalid_argument("degree_supports: degree must be positive");
  const int m = w.alphabet_size();
  std::vector<PointSet> out(ipow(m, d), PointSet(m * d));
  TupleScan scan(w, d);
  scan.run([](int, Letter) { return true; }, [&](std::size_t u, PointView p) { out[u].push_back(p); });
  for (auto& s : out) s.canonicalize();
  return out;
}

PlanarSignature planar_signature(const Word& w) {
  if (w.alphabet_size() != 2) throw std::invalid_argument("planar_signature: requires a two-letter alphabet");
  return {hull_2d(letter_height(w, 0).points), hull_2d(letter_height(w, 1).points)};
}

DegreeSignature degree_signature(const Word& w, int d) {
  DegreeSignature sig{w.alphabet_size(), d, {}};
  if (d == 1 && w.alphabet_size() == 2) {
    PlanarSignature p = planar_signature(w);
    sig.entries = {std::move(p.a), std::move(p.b)};
    return sig;
  }
  if (d == 1) {
    for (int i = 0; i < w.alphabet_size(); ++i) sig.entries.push_back(hull_nd(letter_height(w, i).points));
    return sig;
  }
  for (const PointSet& s : degree_supports(w, d)) sig.entries.push_back(hull_nd(s));
  return sig;
}

UTnSignature utn_signature(const Word& w, int n) {
  if (n < 2) throw std::invalid_argument("utn_signature: n must be at least 2");
  UTnSignature sig{n, {}};
  for (int d = 1; d < n; ++d) sig.per_degree.push_back(degree_signature(w, d));
  return sig;
}

bool check_recursion(const Word& w, const Word& u, int j) {
  const int m = w.alphabet_size();
  if (j < 0 || j >= m) throw std::invalid_argument("check_recursion: letter outside alphabet");
  std::vector<Letter> ext(u.letters().begin(), u.letters().end());
  ext.push_back(static_cast<Letter>(j));
  const Word uj(std::move(ext), m);
  const Content cu = content(u);
  const int d = static_cast<int>(u.size());

  PointSet lhs(m * (d + 1));
  PointSet sup = support_points(w, uj);
  for (std::size_t i = 0; i < sup.size(); ++i) lhs.push_back(pi_map(sup[i], cu, d));
  lhs.canonicalize();

  const Word aj(std::vector<Letter>{static_cast<Letter>(j)}, m);
  PointSet rhs = intersect_constraint(product(support_points(w, u), support_points(w, aj)), cu);
  rhs.canonicalize();
  return lhs == rhs;
}

DegreeComparator::DegreeComparator(const Word& w, int d) : w_(w), d_(d), supports_(degree_supports(w, d)) {
  oracles_.resize(supports_.size());
}

HullOracle& DegreeComparator::oracle(std::size_t entry) {
  if (!oracles_[entry]) oracles_[entry] = std::make_unique<HullOracle>(supports_[entry]);
  return *oracles_[entry];
}

bool DegreeComparator::equals(const Word& v) {
  if (v.alphabet_size() != w_.alphabet_size()) return false;
  std::vector<PointSet> other = degree_supports(v, d_);
  for (std::size_t e = 0; e < other.size(); ++e) {
    const PointSet& mine = supports_[e];
    const PointSet& theirs = other[e];
    if (mine == theirs) continue;
    if (mine.empty() || theirs.empty()) return false;
    std::unique_ptr<HullOracle> theirs_oracle;
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (theirs.contains(mine[i])) continue;
      if (!theirs_oracle) theirs_oracle = std::make_unique<HullOracle>(theirs);
      if (!theirs_oracle->contains(mine[i])) return false;
    }
    for (std::size_t i = 0; i < theirs.size(); ++i) {
      if (mine.contains(theirs[i])) continue;
      if (!oracle(e).contains(theirs[i])) return false;
    }
  }
  return true;
}

}  // namespace tropid
