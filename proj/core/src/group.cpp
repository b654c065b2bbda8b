#include "gainline/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace gainline {

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<Elem> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)), order_(order), table_(std::move(table)),
      labels_(std::move(labels)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  if (table_.size() != static_cast<size_t>(order_) * order_)
    throw std::invalid_argument("multiplication table has wrong size");
  for (Elem v : table_)
    if (v < 0 || v >= order_)
      throw std::invalid_argument("multiplication table entry out of range");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(order_);
  for (int r = 0; r < order_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < order_; ++c) {
      Elem v = table_[static_cast<size_t>(r) * order_ + c];
      if (seen[v]) throw std::invalid_argument("table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < order_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < order_; ++r) {
      Elem v = table_[static_cast<size_t>(r) * order_ + c];
      if (seen[v])
        throw std::invalid_argument("table column is not a permutation");
      seen[v] = 1;
    }
  }

  // two-sided identity
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g)
      ok = table_[static_cast<size_t>(e) * order_ + g] == g &&
           table_[static_cast<size_t>(g) * order_ + e] == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("table has no identity element");

  // inverses
  inv_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h) {
      if (table_[static_cast<size_t>(g) * order_ + h] == identity_ &&
          table_[static_cast<size_t>(h) * order_ + g] == identity_) {
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0)
      throw std::invalid_argument("element has no two-sided inverse");
  }

  // associativity: full up to order 64, sampled above (cubic cost)
  auto assoc = [&](Elem a, Elem b, Elem c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (order_ <= 64) {
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b)
        for (Elem c = 0; c < order_; ++c)
          if (!assoc(a, b, c))
            throw std::invalid_argument("multiplication table is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, order_ - 1);
    for (int i = 0; i < 200000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw std::invalid_argument("multiplication table is not associative");
    trusted_ = false;
  }

  abelian_ = true;
  for (Elem a = 0; a < order_ && abelian_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  for (Elem g = 0; g < order_; ++g)
    if (is_central_involution(g)) central_involutions_.push_back(g);

  if (labels_.empty()) {
    labels_.reserve(order_);
    for (int g = 0; g < order_; ++g) labels_.push_back("g" + std::to_string(g));
  }
  if (labels_.size() != static_cast<size_t>(order_))
    throw std::invalid_argument("label count does not match group order");
}

bool FiniteGroup::is_central(Elem g) const {
  check(g);
  for (Elem h = 0; h < order_; ++h)
    if (mul(g, h) != mul(h, g)) return false;
  return true;
}

std::optional<Elem> FiniteGroup::element_by_label(
    const std::string& label) const {
  for (int g = 0; g < order_; ++g)
    if (labels_[g] == label) return g;
  return std::nullopt;
}

void FiniteGroup::set_canonical_involution(Elem g) {
  if (!is_central_involution(g))
    throw std::invalid_argument("canonical involution must be central and involutive");
  canonical_involution_ = g;
}

namespace {

GroupPtr make_cyclic(int n, const std::string& name, bool t2_labels) {
  if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  std::vector<std::string> labels;
  if (t2_labels) {
    labels = {"+1", "-1"};
  } else {
    for (int g = 0; g < n; ++g) labels.push_back(std::to_string(g));
  }
  auto grp = std::make_shared<FiniteGroup>(name, n, std::move(table),
                                           std::move(labels));
  if (t2_labels) grp->set_canonical_involution(1);
  return grp;
}

GroupPtr make_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral(n) needs n >= 1");
  // elements 0..n-1 are rotations r^i, n..2n-1 are reflections r^i s,
  // with s r = r^{-1} s.
  int ord = 2 * n;
  auto idx = [n](bool flip, int rot) { return (flip ? n : 0) + ((rot % n + n) % n); };
  std::vector<Elem> table(static_cast<size_t>(ord) * ord);
  for (int a = 0; a < ord; ++a) {
    bool fa = a >= n;
    int ra = fa ? a - n : a;
    for (int b = 0; b < ord; ++b) {
      bool fb = b >= n;
      int rb = fb ? b - n : b;
      // (r^ra s^fa)(r^rb s^fb) = r^(ra + rb * (fa ? -1 : 1)) s^(fa xor fb)
      int rot = fa ? ra - rb : ra + rb;
      table[static_cast<size_t>(a) * ord + b] = idx(fa != fb, rot);
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
  for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  return std::make_shared<FiniteGroup>("dihedral(" + std::to_string(n) + ")",
                                       ord, std::move(table), std::move(labels));
}

GroupPtr make_quaternion8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto enc = [](int basis, int sign) { return basis * 2 + (sign < 0 ? 1 : 0); };
  // basis products: b1*b2 -> (basis, sign); bases 0=1,1=i,2=j,3=k
  static const int bprod[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  int ord = 8;
  std::vector<Elem> table(64);
  for (int a = 0; a < ord; ++a) {
    int ba = a / 2, sa = a % 2 ? -1 : 1;
    for (int b = 0; b < ord; ++b) {
      int bb = b / 2, sb = b % 2 ? -1 : 1;
      int basis = bprod[ba][bb][0];
      int sign = bprod[ba][bb][1] * sa * sb;
      table[static_cast<size_t>(a) * ord + b] = enc(basis, sign);
    }
  }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return std::make_shared<FiniteGroup>("quaternion8", ord, std::move(table),
                                       std::move(labels));
}

GroupPtr make_symmetric(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("symmetric(n) supports 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int ord = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& q) {
    for (int i = 0; i < ord; ++i)
      if (perms[i] == q) return i;
    return -1;
  };
  std::vector<Elem> table(static_cast<size_t>(ord) * ord);
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b) {
      std::vector<int> q(n);
      for (int x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];  // (a*b)(x)=a(b(x))
      table[static_cast<size_t>(a) * ord + b] = find(q);
    }
  std::vector<std::string> labels;
  for (auto& perm : perms) {
    std::string s;
    for (int x : perm) s += static_cast<char>('0' + x);
    labels.push_back(s);
  }
  return std::make_shared<FiniteGroup>("symmetric(" + std::to_string(n) + ")",
                                       ord, std::move(table), std::move(labels));
}

bool parse_arg(const std::string& spec, const std::string& head, int& out) {
  if (spec.size() < head.size() + 3) return false;
  if (spec.compare(0, head.size(), head) != 0) return false;
  if (spec[head.size()] != '(' || spec.back() != ')') return false;
  std::string num = spec.substr(head.size() + 1, spec.size() - head.size() - 2);
  if (num.empty()) return false;
  for (char c : num)
    if (!isdigit(static_cast<unsigned char>(c))) return false;
  out = std::stoi(num);
  return true;
}

}  // namespace

GroupPtr named_group(const std::string& spec) {
  int n = 0;
  if (spec == "t2") return make_cyclic(2, "t2", true);
  if (parse_arg(spec, "cyclic", n)) return make_cyclic(n, spec, false);
  if (parse_arg(spec, "dihedral", n)) return make_dihedral(n);
  if (spec == "quaternion8") return make_quaternion8();
  if (parse_arg(spec, "symmetric", n)) return make_symmetric(n);
  // anything else is treated as a path to a table file
  if (spec.find('(') == std::string::npos) {
    std::ifstream probe(spec);
    if (probe.good()) return group_from_table_file(spec);
  }
  throw std::invalid_argument("unknown group spec: " + spec);
}

GroupPtr group_from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group table file: " + path);
  std::string word;
  if (!(in >> word) || word != "order")
    throw std::invalid_argument("group table file must start with 'order n'");
  int n = 0;
  if (!(in >> n) || n <= 0)
    throw std::invalid_argument("bad group order in table file");
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (auto& v : table)
    if (!(in >> v)) throw std::invalid_argument("truncated group table file");
  std::vector<std::string> labels;
  if (in >> word) {
    if (word != "labels")
      throw std::invalid_argument("unexpected trailing content in table file");
    for (int i = 0; i < n; ++i) {
      std::string l;
      if (!(in >> l)) throw std::invalid_argument("truncated labels line");
      labels.push_back(l);
    }
  }
  return std::make_shared<FiniteGroup>(path, n, std::move(table),
                                       std::move(labels));
}

}  // namespace gainline
