#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "germsig/matrix.hpp"
#include "germsig/symplectic.hpp"

namespace germsig {

// Z_d branched cover of the sphere with m branch points; labels[i] is the
// image of the loop around the i-th point in Z_d.
struct CoverSpec {
  int d = 2;
  int m = 4;
  std::vector<int> labels;

  // All labels 1 (requires d | m).
  static CoverSpec p1(int d, int m);
  // Throws Error("BadSpec") on malformed data, Error("NotTotallyRamified")
  // when a label is not a unit mod d.
  void validate() const;

  friend bool operator<(const CoverSpec& a, const CoverSpec& b) {
    return std::tie(a.d, a.m, a.labels) < std::tie(b.d, b.m, b.labels);
  }
  friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

// 2g = 2 - 2d + m(d - 1).
int genus(const CoverSpec& spec);

// One letter of a word in the symmetric mapping class group: the half twist
// sigma_ij or the full twist tau_ij, with exponent +1 or -1. Indices are
// 1-based and stored with i < j.
struct Letter {
  enum class Kind { kHalfTwist, kFullTwist };
  Kind kind = Kind::kHalfTwist;
  int i = 1;
  int j = 2;
  int exponent = 1;

  Letter inverse() const { return Letter{kind, i, j, -exponent}; }
  std::string to_string() const;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct GeneratorWord {
  std::vector<Letter> letters;

  // Grammar: whitespace-separated tokens  (s|t) INDEX [^ EXP]  where INDEX is
  // two digits ("12") or "i,j" / "i_j" for multi-digit indices and EXP is a
  // nonzero integer. "s12^-2" expands to two inverse letters.
  static GeneratorWord parse(const std::string& text);
  std::string to_string() const;
  GeneratorWord inverse() const;
  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend GeneratorWord operator*(GeneratorWord a, const GeneratorWord& b) {
    a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
    return a;
  }
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

// Throws Error("InvalidWord") if a letter is out of range or a half twist
// exchanges points with different labels.
void validate_word(const CoverSpec& spec, const GeneratorWord& word);

// Integral symplectic Gram-Schmidt: P with P^T pairing P = J.
// Throws Error("NotUnimodular").
IntMatrix symplectic_basis(const IntMatrix& pairing);

// Explicit cell model of the closed cover surface and the homology action
// of the generators. The 1-skeleton is the lift of a flower of m loops x_k
// based at a point near the base point; faces are the lifts of the petals
// (one d-gon each) and the d lifts of the outer face.
class CoverModel {
 public:
  using Chain = std::vector<Integer>;  // coefficients on edges e(k, c)

  explicit CoverModel(CoverSpec spec);

  const CoverSpec& spec() const { return spec_; }
  std::size_t genus() const { return genus_; }
  std::size_t edge_count() const { return static_cast<std::size_t>(spec_.m * spec_.d); }
  std::size_t edge(int k, int c) const;  // 0-based k, vertex c

  // Boundary chains of the faces traced from the rotation system.
  const std::vector<Chain>& faces() const { return faces_; }
  bool is_cycle(const Chain& z) const;
  // Algebraic intersection number of two 1-cycles of the ribbon graph.
  Integer intersection(const Chain& a, const Chain& b) const;
  // Cycles representing the unnormalized H_1 basis and its pairing matrix.
  const std::vector<Chain>& homology_cycles() const { return cycles_; }
  const IntMatrix& raw_pairing() const { return raw_pairing_; }
  // Coordinates of a cycle in the symplectic basis.
  std::vector<Integer> symplectic_coordinates(const Chain& z) const;
  // Cycle representing the symplectic basis vector `index`.
  Chain symplectic_cycle(std::size_t index) const;

  // Homology action of one letter (memoized).
  SpMatrix letter_matrix(const Letter& letter) const;

 private:
  using FreeWord = std::vector<int>;  // +-(k+1)
  using Automorphism = std::vector<FreeWord>;

  Automorphism letter_automorphism(const Letter& letter) const;
  Chain fox_chain(const FreeWord& w, int start_vertex) const;
  Chain apply(const Automorphism& a, const Chain& z) const;
  std::vector<Integer> raw_coordinates(const Chain& z) const;
  Chain cycle_from_nontree(const std::vector<Integer>& coords) const;

  CoverSpec spec_;
  std::size_t genus_ = 0;
  std::vector<int> vertex_position_;  // position of each vertex on the tree path
  std::vector<int> vertex_at_;
  std::vector<long> nontree_index_;   // edge -> nontree slot or -1
  std::vector<std::size_t> nontree_edges_;
  std::vector<Chain> faces_;
  std::vector<Chain> cycles_;
  std::size_t face_rank_ = 0;
  IntMatrix projection_;   // nontree coords -> raw H_1 coords
  IntMatrix raw_pairing_;
  IntMatrix basis_;        // symplectic basis in raw coords (columns)
  IntMatrix basis_inverse_;

  mutable std::mutex memo_mu_;
  mutable std::map<Letter, SpMatrix> memo_;
};

// Shared per-spec model, memoized by (d, m, labels).
std::shared_ptr<const CoverModel> cover_model(const CoverSpec& spec);

SpMatrix homology_rep(const CoverSpec& spec, const Letter& letter);
// Ordered product of the letter matrices.
SpMatrix word_to_matrix(const CoverSpec& spec, const GeneratorWord& word);

}  // namespace germsig
