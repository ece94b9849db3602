#include "germsig/coverrep.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "germsig/error.hpp"

namespace germsig {

namespace {

int mod(long a, int d) {
  const long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

}  // namespace

// ---------------------------------------------------------------- CoverSpec

CoverSpec CoverSpec::p1(int d, int m) {
  if (d < 2 || m < 3) throw Error("BadSpec", "p1 requires d >= 2 and m >= 3");
  if (m % d != 0)
    throw Error("BadSpec", "p1 requires d | m (d=" + std::to_string(d) +
                               ", m=" + std::to_string(m) + ")");
  return CoverSpec{d, m, std::vector<int>(static_cast<std::size_t>(m), 1)};
}

void CoverSpec::validate() const {
  if (d < 2) throw Error("BadSpec", "d must be at least 2");
  if (m < 3) throw Error("BadSpec", "m must be at least 3");
  if (labels.size() != static_cast<std::size_t>(m))
    throw Error("BadSpec", "expected " + std::to_string(m) + " labels, got " +
                               std::to_string(labels.size()));
  long total = 0;
  for (int l : labels) total += l;
  if (mod(total, d) != 0) throw Error("BadSpec", "labels must sum to 0 mod d");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (std::gcd(mod(labels[i], d), d) != 1)
      throw Error("NotTotallyRamified",
                  "label " + std::to_string(labels[i]) + " at point " +
                      std::to_string(i + 1) + " is not a unit mod " + std::to_string(d));
}

int genus(const CoverSpec& spec) {
  spec.validate();
  return (2 - 2 * spec.d + spec.m * (spec.d - 1)) / 2;
}

// ------------------------------------------------------------------- words

std::string Letter::to_string() const {
  std::string s = kind == Kind::kHalfTwist ? "s" : "t";
  if (i < 10 && j < 10)
    s += std::to_string(i) + std::to_string(j);
  else
    s += std::to_string(i) + "," + std::to_string(j);
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

GeneratorWord GeneratorWord::parse(const std::string& text) {
  GeneratorWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto bad = [&](const std::string& why) {
      return Error("InvalidWord", "token '" + tok + "': " + why);
    };
    Letter l;
    if (tok[0] == 's' || tok[0] == 'S')
      l.kind = Letter::Kind::kHalfTwist;
    else if (tok[0] == 't' || tok[0] == 'T')
      l.kind = Letter::Kind::kFullTwist;
    else
      throw bad("expected s or t");
    std::string body = tok.substr(1);
    long exp = 1;
    if (auto caret = body.find('^'); caret != std::string::npos) {
      const std::string e = body.substr(caret + 1);
      body = body.substr(0, caret);
      try {
        std::size_t used = 0;
        exp = std::stol(e, &used);
        if (used != e.size()) throw bad("bad exponent");
      } catch (const std::logic_error&) {
        throw bad("bad exponent");
      }
      if (exp == 0) throw bad("zero exponent");
    }
    long i = 0, j = 0;
    const auto sep = body.find_first_of(",_");
    auto parse_index = [&](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
          }))
        throw bad("bad index");
      return std::stol(s);
    };
    if (sep != std::string::npos) {
      i = parse_index(body.substr(0, sep));
      j = parse_index(body.substr(sep + 1));
    } else {
      if (body.size() != 2) throw bad("use i,j for multi-digit indices");
      i = parse_index(body.substr(0, 1));
      j = parse_index(body.substr(1, 1));
    }
    if (i == j || i < 1 || j < 1) throw bad("indices must be distinct and positive");
    l.i = static_cast<int>(std::min(i, j));
    l.j = static_cast<int>(std::max(i, j));
    l.exponent = exp > 0 ? 1 : -1;
    for (long k = 0; k < std::labs(exp); ++k) w.letters.push_back(l);
  }
  return w;
}

std::string GeneratorWord::to_string() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    s += l.to_string();
  }
  return s;
}

GeneratorWord GeneratorWord::inverse() const {
  GeneratorWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(it->inverse());
  return w;
}

void validate_word(const CoverSpec& spec, const GeneratorWord& word) {
  for (const auto& l : word.letters) {
    if (l.i < 1 || l.j > spec.m || l.i >= l.j || (l.exponent != 1 && l.exponent != -1))
      throw Error("InvalidWord", "letter " + l.to_string() + " out of range for m=" +
                                     std::to_string(spec.m));
    if (l.kind == Letter::Kind::kHalfTwist &&
        mod(spec.labels[l.i - 1], spec.d) != mod(spec.labels[l.j - 1], spec.d))
      throw Error("InvalidWord", "half twist " + l.to_string() +
                                     " exchanges points with different labels");
  }
}

// ------------------------------------------------------ symplectic basis

IntMatrix symplectic_basis(const IntMatrix& pairing) {
  const std::size_t n = pairing.rows();
  if (!pairing.square() || n % 2 != 0)
    throw Error("NotUnimodular", "pairing must be square of even size");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (pairing(r, c) != -pairing(c, r))
        throw Error("NotUnimodular", "pairing is not skew-symmetric");

  using Vec = std::vector<Integer>;
  auto form = [&](const Vec& u, const Vec& v) {
    Integer acc = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (u[r] == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (v[c] != 0) acc += u[r] * pairing(r, c) * v[c];
    }
    return acc;
  };

  std::vector<Vec> lattice;
  for (std::size_t k = 0; k < n; ++k) {
    Vec v(n, 0);
    v[k] = 1;
    lattice.push_back(std::move(v));
  }
  std::vector<Vec> es, fs;
  while (!lattice.empty()) {
    const Vec e = lattice.front();
    // f = sum c_k L_k with <e, f> = 1 via iterated extended gcd.
    Vec f(n, 0);
    Integer g = 0;
    std::vector<Integer> coef(lattice.size(), 0);
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      const Integer v = form(e, lattice[k]);
      if (v == 0) continue;
      Integer ng, s, t;
      mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                 v.get_mpz_t());
      for (std::size_t q = 0; q < k; ++q) coef[q] *= s;
      coef[k] = t;
      g = ng;
      if (g == 1) break;
    }
    if (g != 1) throw Error("NotUnimodular", "pairing is degenerate over Z");
    for (std::size_t k = 0; k < lattice.size(); ++k)
      if (coef[k] != 0)
        for (std::size_t r = 0; r < n; ++r) f[r] += coef[k] * lattice[k][r];

    std::vector<Vec> rest;
    for (const auto& v : lattice) {
      const Integer vf = form(v, f);
      const Integer ve = form(v, e);
      Vec w(n);
      for (std::size_t r = 0; r < n; ++r) w[r] = v[r] - vf * e[r] + ve * f[r];
      rest.push_back(std::move(w));
    }
    const std::size_t before = lattice.size();
    lattice = lattice_basis(std::move(rest));
    if (lattice.size() + 2 != before)
      throw Error("NotUnimodular", "symplectic reduction lost rank");
    es.push_back(e);
    fs.push_back(std::move(f));
  }

  const std::size_t g = es.size();
  IntMatrix p(n, n);
  for (std::size_t k = 0; k < g; ++k) {
    p.set_column(k, es[k]);
    p.set_column(g + k, fs[k]);
  }
  return p;
}

// -------------------------------------------------------------- the model

std::size_t CoverModel::edge(int k, int c) const {
  return static_cast<std::size_t>(k * spec_.d + mod(c, spec_.d));
}

CoverModel::CoverModel(CoverSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  for (auto& l : spec_.labels) l = mod(l, spec_.d);
  genus_ = static_cast<std::size_t>(germsig::genus(spec_));
  const int d = spec_.d, m = spec_.m;
  const std::size_t ne = edge_count();
  const auto& lab = spec_.labels;

  // Spanning tree: the lift of x_1 starting at 0 runs through every vertex.
  vertex_at_.resize(d);
  vertex_position_.resize(d);
  for (int p = 0; p < d; ++p) {
    vertex_at_[p] = mod(static_cast<long>(p) * lab[0], d);
    vertex_position_[vertex_at_[p]] = p;
  }
  nontree_index_.assign(ne, -1);
  std::vector<bool> in_tree(ne, false);
  for (int p = 0; p + 1 < d; ++p) in_tree[edge(0, vertex_at_[p])] = true;
  for (std::size_t e = 0; e < ne; ++e)
    if (!in_tree[e]) {
      nontree_index_[e] = static_cast<long>(nontree_edges_.size());
      nontree_edges_.push_back(e);
    }

  // Faces from the rotation system: at each vertex the half-edges in ccw
  // order are out_0, in_0, out_1, in_1, ...; a face turns to the ccw
  // predecessor of the half-edge it arrives on.
  // Dart index: 2 * edge + (0 forward, 1 backward).
  std::vector<bool> seen(2 * ne, false);
  for (std::size_t start = 0; start < 2 * ne; ++start) {
    if (seen[start]) continue;
    Chain face(ne, 0);
    std::size_t dart = start;
    while (!seen[dart]) {
      seen[dart] = true;
      const std::size_t e = dart / 2;
      const int k = static_cast<int>(e) / d;
      const int c = static_cast<int>(e) % d;
      face[e] += (dart % 2 == 0) ? 1 : -1;
      // Arrival half-edge at vertex v, as a rotation slot.
      int v, slot;
      if (dart % 2 == 0) {
        v = mod(c + lab[k], d);
        slot = 2 * k + 1;
      } else {
        v = c;
        slot = 2 * k;
      }
      const int next = mod(slot - 1, 2 * m);
      const int nk = next / 2;
      dart = (next % 2 == 0) ? 2 * edge(nk, v) : 2 * edge(nk, v - lab[nk]) + 1;
    }
    faces_.push_back(std::move(face));
  }
  if (faces_.size() != static_cast<std::size_t>(m + d))
    throw Error("BadSpec", "cell model has " + std::to_string(faces_.size()) +
                               " faces, expected m + d");

  // H_1 = Z^{nontree} / (face boundaries).
  const std::size_t r = nontree_edges_.size();
  IntMatrix fmat(r, faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (std::size_t e = 0; e < ne; ++e)
      if (nontree_index_[e] >= 0) fmat(nontree_index_[e], f) = faces_[f][e];
  const SmithForm snf = smith_normal_form(fmat);
  for (const auto& x : snf.diagonal)
    if (x != 1) throw Error("NotUnimodular", "cover homology has torsion");
  face_rank_ = snf.diagonal.size();
  const std::size_t h = r - face_rank_;
  if (h != 2 * genus_)
    throw Error("BadSpec", "homology rank " + std::to_string(h) + " != 2g");
  projection_ = IntMatrix(h, r);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t c = 0; c < r; ++c) projection_(a, c) = snf.left(face_rank_ + a, c);
  for (std::size_t a = 0; a < h; ++a) {
    std::vector<Integer> coords(r);
    for (std::size_t c = 0; c < r; ++c) coords[c] = snf.left_inverse(c, face_rank_ + a);
    cycles_.push_back(cycle_from_nontree(coords));
  }

  raw_pairing_ = IntMatrix(h, h);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b)
      raw_pairing_(a, b) = intersection(cycles_[a], cycles_[b]);
  basis_ = symplectic_basis(raw_pairing_);
  // P^-1 = -J P^T Omega.
  basis_inverse_ = -(standard_form(genus_) * basis_.transpose() * raw_pairing_);
}

bool CoverModel::is_cycle(const Chain& z) const {
  const int d = spec_.d;
  std::vector<Integer> boundary(d, 0);
  for (int k = 0; k < spec_.m; ++k)
    for (int c = 0; c < d; ++c) {
      const Integer& x = z[edge(k, c)];
      boundary[mod(c + spec_.labels[k], d)] += x;
      boundary[c] -= x;
    }
  return std::all_of(boundary.begin(), boundary.end(), [](const Integer& x) { return x == 0; });
}

Integer CoverModel::intersection(const Chain& a, const Chain& b) const {
  // b is pushed off to the left of every edge; crossings occur at vertices.
  const int d = spec_.d, m = spec_.m;
  Integer total = 0;
  std::vector<Integer> fa(2 * m), fb(2 * m);
  for (int v = 0; v < d; ++v) {
    for (int k = 0; k < m; ++k) {
      const std::size_t out = edge(k, v);
      const std::size_t in = edge(k, v - spec_.labels[k]);
      fa[2 * k] = a[out];
      fa[2 * k + 1] = -a[in];
      fb[2 * k] = b[out];
      fb[2 * k + 1] = -b[in];
    }
    Integer prefix = 0;
    for (int j = 0; j < 2 * m; ++j) {
      if (j % 2 == 0) {
        prefix += fa[j];
        total += fb[j] * prefix;
      } else {
        total += fb[j] * prefix;
        prefix += fa[j];
      }
    }
  }
  return total;
}

CoverModel::Chain CoverModel::cycle_from_nontree(const std::vector<Integer>& coords) const {
  const int d = spec_.d;
  Chain z(edge_count(), 0);
  for (std::size_t s = 0; s < coords.size(); ++s) {
    if (coords[s] == 0) continue;
    const std::size_t e = nontree_edges_[s];
    const int k = static_cast<int>(e) / d;
    const int c = static_cast<int>(e) % d;
    z[e] += coords[s];
    // Close up along the tree from the end of e back to its start.
    const int from = vertex_position_[mod(c + spec_.labels[k], d)];
    const int to = vertex_position_[c];
    if (from < to)
      for (int p = from; p < to; ++p) z[edge(0, vertex_at_[p])] += coords[s];
    else
      for (int p = to; p < from; ++p) z[edge(0, vertex_at_[p])] -= coords[s];
  }
  return z;
}

std::vector<Integer> CoverModel::raw_coordinates(const Chain& z) const {
  std::vector<Integer> nt(nontree_edges_.size());
  for (std::size_t s = 0; s < nontree_edges_.size(); ++s) nt[s] = z[nontree_edges_[s]];
  return projection_ * nt;
}

std::vector<Integer> CoverModel::symplectic_coordinates(const Chain& z) const {
  if (z.size() != edge_count() || !is_cycle(z))
    throw std::invalid_argument("symplectic_coordinates: not a cycle");
  return basis_inverse_ * raw_coordinates(z);
}

CoverModel::Chain CoverModel::symplectic_cycle(std::size_t index) const {
  Chain z(edge_count(), 0);
  for (std::size_t a = 0; a < cycles_.size(); ++a) {
    const Integer& c = basis_(a, index);
    if (c == 0) continue;
    for (std::size_t e = 0; e < z.size(); ++e) z[e] += c * cycles_[a][e];
  }
  return z;
}

CoverModel::Chain CoverModel::fox_chain(const FreeWord& w, int start_vertex) const {
  Chain z(edge_count(), 0);
  long at = start_vertex;
  for (int letter : w) {
    const int k = std::abs(letter) - 1;
    if (letter > 0) {
      z[edge(k, mod(at, spec_.d))] += 1;
      at += spec_.labels[k];
    } else {
      at -= spec_.labels[k];
      z[edge(k, mod(at, spec_.d))] -= 1;
    }
  }
  return z;
}

CoverModel::Chain CoverModel::apply(const Automorphism& a, const Chain& z) const {
  Chain out(edge_count(), 0);
  for (int k = 0; k < spec_.m; ++k) {
    const Chain image = fox_chain(a[k], 0);
    for (int c = 0; c < spec_.d; ++c) {
      const Integer& x = z[edge(k, c)];
      if (x == 0) continue;
      // Lift starting at vertex c is the deck translate by t^c.
      for (int kk = 0; kk < spec_.m; ++kk)
        for (int cc = 0; cc < spec_.d; ++cc) {
          const Integer& y = image[edge(kk, cc)];
          if (y != 0) out[edge(kk, cc + c)] += x * y;
        }
    }
  }
  return out;
}

namespace {

using FreeWord = std::vector<int>;
using Automorphism = std::vector<FreeWord>;

void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

FreeWord invert(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// (a o b)(x) = a(b(x)).
Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k)
    for (int letter : b[k]) {
      const FreeWord& img = a[std::abs(letter) - 1];
      if (letter > 0)
        for (int y : img) push_reduced(out[k], y);
      else
        for (int y : invert(img)) push_reduced(out[k], y);
    }
  return out;
}

Automorphism identity_aut(int m) {
  Automorphism a(m);
  for (int k = 0; k < m; ++k) a[k] = {k + 1};
  return a;
}

// Artin generator exchanging points i, i+1 (0-based i).
Automorphism artin(int m, int i, int exponent) {
  Automorphism a = identity_aut(m);
  const int x = i + 1, y = i + 2;
  if (exponent > 0) {
    a[i] = {x, y, -x};
    a[i + 1] = {x};
  } else {
    a[i] = {y};
    a[i + 1] = {-y, x, y};
  }
  return a;
}

}  // namespace

CoverModel::Automorphism CoverModel::letter_automorphism(const Letter& letter) const {
  const int m = spec_.m;
  const int i = letter.i - 1, j = letter.j - 1;
  // sigma_ij = c sigma_i c^-1 with c = sigma_{j-1} ... sigma_{i+1}.
  Automorphism c = identity_aut(m), cinv = identity_aut(m);
  for (int q = j - 1; q > i; --q) {
    c = compose(c, artin(m, q, 1));
    cinv = compose(artin(m, q, -1), cinv);
  }
  Automorphism a = compose(compose(c, artin(m, i, letter.exponent)), cinv);
  if (letter.kind == Letter::Kind::kFullTwist) a = compose(a, a);
  return a;
}

SpMatrix CoverModel::letter_matrix(const Letter& letter) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (auto it = memo_.find(letter); it != memo_.end()) return it->second;
  }
  validate_word(spec_, GeneratorWord{{letter}});
  const Automorphism a = letter_automorphism(letter);
  // The automorphism must respect the monodromy x_k -> labels[k].
  for (int k = 0; k < spec_.m; ++k) {
    long s = 0;
    for (int x : a[k]) s += (x > 0 ? 1 : -1) * spec_.labels[std::abs(x) - 1];
    if (mod(s, spec_.d) != spec_.labels[k])
      throw Error("InvalidWord", "letter " + letter.to_string() + " does not lift");
  }
  const std::size_t h = cycles_.size();
  IntMatrix raw(h, h);
  for (std::size_t b = 0; b < h; ++b) raw.set_column(b, raw_coordinates(apply(a, cycles_[b])));
  const SpMatrix result = check_symplectic(basis_inverse_ * raw * basis_);
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.emplace(letter, result);
  return result;
}

std::shared_ptr<const CoverModel> cover_model(const CoverSpec& spec) {
  static std::mutex mu;
  static std::map<CoverSpec, std::shared_ptr<const CoverModel>> models;
  CoverSpec key = spec;
  key.validate();
  for (auto& l : key.labels) l = mod(l, key.d);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = models.find(key); it != models.end()) return it->second;
  }
  auto model = std::make_shared<const CoverModel>(key);
  std::lock_guard<std::mutex> lock(mu);
  return models.emplace(key, std::move(model)).first->second;
}

SpMatrix homology_rep(const CoverSpec& spec, const Letter& letter) {
  return cover_model(spec)->letter_matrix(letter);
}

SpMatrix word_to_matrix(const CoverSpec& spec, const GeneratorWord& word) {
  auto model = cover_model(spec);
  validate_word(model->spec(), word);
  SpMatrix acc(model->genus());
  for (const auto& l : word.letters) acc = acc * model->letter_matrix(l);
  return acc;
}

}  // namespace germsig
