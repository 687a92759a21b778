#include "schubert/weyl.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

bool column_negative(const WeylElement& w, int col) {
  for (int r = 0; r < w.rank(); ++r) {
    if (int v = w(r, col); v != 0) return v < 0;
  }
  return false;
}

}  // namespace

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.rank_ = rank;
  w.entries_.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i) w.entries_[i * rank + i] = 1;
  return w;
}

bool WeylElement::is_identity() const { return *this == identity(rank_); }

RootVector WeylElement::apply(std::span<const int> v) const {
  RootVector out(rank_, 0);
  for (int r = 0; r < rank_; ++r) {
    int acc = 0;
    for (int c = 0; c < rank_; ++c) acc += entries_[r * rank_ + c] * v[c];
    out[r] = acc;
  }
  return out;
}

bool WeylElement::sends_simple_root_negative(int node) const {
  return column_negative(*this, node - 1);
}

void WeylElement::right_multiply_simple(const CartanMatrix& cartan, int node) {
  // w s_i (alpha_j) = w(alpha_j) - C(j, i) w(alpha_i); column i is negated.
  const int i = node - 1;
  for (int j = 0; j < rank_; ++j) {
    if (j == i) continue;
    const int c = cartan(j, i);
    if (c == 0) continue;
    for (int r = 0; r < rank_; ++r)
      entries_[r * rank_ + j] = static_cast<std::int8_t>(entries_[r * rank_ + j] -
                                                         c * entries_[r * rank_ + i]);
  }
  for (int r = 0; r < rank_; ++r)
    entries_[r * rank_ + i] = static_cast<std::int8_t>(-entries_[r * rank_ + i]);
}

void WeylElement::left_multiply_simple(const CartanMatrix& cartan, int node) {
  // s_i changes only coordinate i: v_i <- v_i - sum_k v_k C(k, i).
  const int i = node - 1;
  for (int col = 0; col < rank_; ++col) {
    int pairing = 0;
    for (int k = 0; k < rank_; ++k) pairing += entries_[k * rank_ + col] * cartan(k, i);
    entries_[i * rank_ + col] = static_cast<std::int8_t>(entries_[i * rank_ + col] - pairing);
  }
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  const int n = u.rank_;
  WeylElement out;
  out.rank_ = n;
  out.entries_.assign(n * n, 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int a = u.entries_[r * n + k];
      if (a == 0) continue;
      for (int c = 0; c < n; ++c)
        out.entries_[r * n + c] = static_cast<std::int8_t>(out.entries_[r * n + c] +
                                                           a * v.entries_[k * n + c]);
    }
  return out;
}

WeylElement from_word(const RootSystem& rs, const Word& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const int letter = word[pos];
    if (letter < 1 || letter > rs.rank()) {
      throw InvalidInput("letter " + std::to_string(letter) + " at position " +
                         std::to_string(pos + 1) + " is out of range 1.." +
                         std::to_string(rs.rank()));
    }
    w.right_multiply_simple(rs.cartan(), letter);
  }
  return w;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  // Strip right descents: w s_{i1} ... s_{ik} = e, so w^{-1} = s_{i1} ... s_{ik}.
  WeylElement u = w;
  WeylElement inv = WeylElement::identity(rs.rank());
  for (;;) {
    int node = 0;
    for (int i = 1; i <= rs.rank() && node == 0; ++i)
      if (u.sends_simple_root_negative(i)) node = i;
    if (node == 0) break;
    u.right_multiply_simple(rs.cartan(), node);
    inv.right_multiply_simple(rs.cartan(), node);
  }
  return inv;
}

std::vector<RootVector> left_inversions(const RootSystem& rs, const WeylElement& w) {
  // Phi+ meets w(Phi-) exactly in {-w(beta) : beta > 0, w(beta) < 0}.
  std::vector<int> indices;
  for (const RootVector& beta : rs.positive_roots()) {
    RootVector image = w.apply(beta);
    if (is_positive(image)) continue;
    for (int& c : image) c = -c;
    indices.push_back(rs.index_of(image));
  }
  std::sort(indices.begin(), indices.end());
  std::vector<RootVector> out;
  out.reserve(indices.size());
  for (int idx : indices) out.push_back(rs.positive_roots()[idx]);
  return out;
}

int length(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const RootVector& beta : rs.positive_roots())
    if (!is_positive(w.apply(beta))) ++count;
  return count;
}

NodeSet right_descents(const WeylElement& w) {
  NodeSet out;
  for (int i = 1; i <= w.rank(); ++i)
    if (w.sends_simple_root_negative(i)) out.insert(i);
  return out;
}

NodeSet left_descents(const RootSystem& rs, const WeylElement& w) {
  return right_descents(inverse(rs, w));
}

Word reduced_word(const RootSystem& rs, const WeylElement& w, DescentChoice choice) {
  // Left descents of x are the right descents of u = x^{-1}; stripping s_i
  // from the left of x is u <- u s_i.
  WeylElement u = inverse(rs, w);
  Word word;
  for (;;) {
    const NodeSet descents = right_descents(u);
    if (descents.empty()) break;
    const int node =
        choice == DescentChoice::Smallest ? descents.nodes().front() : descents.max_node();
    word.push_back(node);
    u.right_multiply_simple(rs.cartan(), node);
  }
  return word;
}

NodeSet support(const RootSystem& rs, const WeylElement& w) {
  NodeSet s;
  for (int letter : reduced_word(rs, w)) s.insert(letter);
  return s;
}

WeylElement longest_parabolic(const RootSystem& rs, NodeSet nodes) {
  WeylElement x = WeylElement::identity(rs.rank());
  WeylElement x_inv = x;
  for (;;) {
    int ascent = 0;
    for (int i : nodes.nodes()) {
      if (!x_inv.sends_simple_root_negative(i)) {
        ascent = i;
        break;
      }
    }
    if (ascent == 0) return x;
    x.left_multiply_simple(rs.cartan(), ascent);
    x_inv.right_multiply_simple(rs.cartan(), ascent);
  }
}

bool is_standard_coxeter(const RootSystem& rs, const WeylElement& d) {
  const Word word = reduced_word(rs, d);
  NodeSet letters;
  for (int l : word) letters.insert(l);
  return static_cast<int>(word.size()) == letters.size();
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::uint64_t cap) {
  const auto order = rs.type().weyl_group_order();
  if (!order || *order > cap) {
    throw BudgetExceeded("|W(" + rs.type().name() + ")| = " +
                         (order ? std::to_string(*order) : std::string("(overflow)")) +
                         " exceeds the enumeration cap " + std::to_string(cap));
  }

  std::vector<WeylElement> out;
  out.reserve(*order);
  std::unordered_set<WeylElement, WeylElementHash> seen;
  seen.reserve(*order);

  std::vector<WeylElement> level{WeylElement::identity(rs.rank())};
  seen.insert(level.front());
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    std::vector<WeylElement> next;
    for (const WeylElement& x : level) {
      for (int i = 1; i <= rs.rank(); ++i) {
        if (x.sends_simple_root_negative(i)) continue;  // x s_i is shorter
        WeylElement y = x;
        y.right_multiply_simple(rs.cartan(), i);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    if (seen.size() > cap) {
      throw BudgetExceeded("Weyl group enumeration exceeded the cap " + std::to_string(cap));
    }
    for (WeylElement& x : level) out.push_back(std::move(x));
    level = std::move(next);
  }

  if (out.size() != *order) {
    throw InconsistencyError("enumerated " + std::to_string(out.size()) + " elements of W(" +
                             rs.type().name() + "), expected " + std::to_string(*order));
  }
  return out;
}

}  // namespace schubert
