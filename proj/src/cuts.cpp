#include "otree/cuts.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace otree {
namespace {

// The forest with the invisible root prepended at index 0.
struct Rooted {
  std::vector<Node> nodes;
  std::vector<NodeAddress> address;
  std::vector<std::vector<std::size_t>> children;

  explicit Rooted(const Forest& f) {
    nodes.push_back(Node{Color::reserved_root().id(), static_cast<std::uint32_t>(f.order() + 1)});
    nodes.insert(nodes.end(), f.nodes().begin(), f.nodes().end());
    address.resize(nodes.size());
    children.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::uint32_t k = 0;
      for (std::size_t j = i + 1; j < i + nodes[i].size; j += nodes[j].size) {
        children[i].push_back(j);
        address[j] = address[i];
        address[j].push_back(k++);
      }
    }
  }

  std::size_t resolve(const NodeAddress& a) const {
    std::size_t i = 0;
    for (std::uint32_t step : a) {
      if (step >= children[i].size()) throw std::invalid_argument("cut address " + format_address(a) + " does not exist");
      i = children[i][step];
    }
    return i;
  }
};

// (node index, count)
using RawCut = std::vector<std::pair<std::size_t, std::uint32_t>>;

struct RawEnumerator {
  const Rooted& r;
  bool allow_root;
  bool allow_inner;
  bool admissible_only;
  std::vector<std::size_t> parents;
  std::vector<RawCut> out;
  RawCut cur;

  void run() {
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      if (r.children[i].empty()) continue;
      if (i == 0 ? !allow_root : !allow_inner) continue;
      parents.push_back(i);
    }
    rec(0, 0);
  }

  void rec(std::size_t k, std::size_t blocked_end) {
    if (k == parents.size()) {
      out.push_back(cur);
      return;
    }
    std::size_t p = parents[k];
    rec(k + 1, blocked_end);
    if (admissible_only && p < blocked_end) return;
    const auto& kids = r.children[p];
    for (std::uint32_t c = 1; c <= kids.size(); ++c) {
      cur.emplace_back(p, c);
      std::size_t last = kids[c - 1];
      std::size_t end = last + r.nodes[last].size;
      rec(k + 1, admissible_only ? std::max(blocked_end, end) : blocked_end);
      cur.pop_back();
    }
  }
};

bool raw_admissible(const Rooted& r, const RawCut& raw) {
  // a cut at p severs the subtrees of its first c children; no further cut
  // may live inside them
  for (const auto& [p, c] : raw) {
    std::size_t begin = p + 1;
    std::size_t last = r.children[p][c - 1];
    std::size_t end = last + r.nodes[last].size;
    for (const auto& [q, d] : raw)
      if (q >= begin && q < end) return false;
  }
  return true;
}

Cut describe(const Rooted& r, const RawCut& raw) {
  Cut c;
  for (const auto& [p, n] : raw) {
    c.nodal_cuts.push_back(NodalCut{r.address[p], n});
    if (p == 0) {
      c.is_full = true;
    } else {
      c.is_word = false;
    }
  }
  std::sort(c.nodal_cuts.begin(), c.nodal_cuts.end());
  c.is_admissible = raw_admissible(r, raw);
  return c;
}

class CutApplier {
 public:
  CutApplier(const Rooted& r, std::vector<std::uint32_t> counts) : r_(r), counts_(std::move(counts)) {}

  CutResult run() {
    std::vector<Node> rem;
    build(0, rem);
    CutResult res;
    ForestBuilder b;
    b.raw().assign(rem.begin() + 1, rem.end());
    res.remainder = std::move(b).build();
    for (auto& p : pieces_) {
      ForestBuilder pb;
      pb.raw() = std::move(p);
      res.pieces.push_back(std::move(pb).build());
    }
    res.cut_part = shuffle_all(res.pieces);
    return res;
  }

 private:
  void build(std::size_t i, std::vector<Node>& out) {
    std::size_t pos = out.size();
    out.push_back(r_.nodes[i]);
    std::uint32_t c = counts_[i];
    std::vector<Node> piece;
    for (std::size_t k = 0; k < r_.children[i].size(); ++k) build(r_.children[i][k], k < c ? piece : out);
    if (c > 0) pieces_.push_back(std::move(piece));
    out[pos].size = static_cast<std::uint32_t>(out.size() - pos);
  }

  const Rooted& r_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::vector<Node>> pieces_;
};

std::vector<RawCut> enumerate_raw(const Rooted& r, CutFamily family) {
  RawEnumerator e{r, false, true, false, {}, {}, {}};
  switch (family) {
    case CutFamily::nodal:
    case CutFamily::left:
      break;
    case CutFamily::admissible:
      e.admissible_only = true;
      break;
    case CutFamily::full_admissible:
      e.allow_root = true;
      e.admissible_only = true;
      break;
    case CutFamily::word:
      e.allow_root = true;
      e.allow_inner = false;
      break;
  }
  e.run();
  if (family == CutFamily::nodal)
    std::erase_if(e.out, [](const RawCut& c) { return c.size() != 1; });
  return std::move(e.out);
}

bool address_less(const Cut& a, const Cut& b) { return a.nodal_cuts < b.nodal_cuts; }

}  // namespace

CutFamily parse_cut_family(std::string_view name) {
  if (name == "nlc" || name == "nodal") return CutFamily::nodal;
  if (name == "lc" || name == "left") return CutFamily::left;
  if (name == "alc" || name == "admissible") return CutFamily::admissible;
  if (name == "falc" || name == "full") return CutFamily::full_admissible;
  if (name == "wc" || name == "word") return CutFamily::word;
  throw std::invalid_argument("unknown cut family '" + std::string(name) + "'");
}

std::string_view cut_family_name(CutFamily family) {
  switch (family) {
    case CutFamily::nodal: return "NLC";
    case CutFamily::left: return "LC";
    case CutFamily::admissible: return "ALC";
    case CutFamily::full_admissible: return "FALC";
    case CutFamily::word: return "WC";
  }
  return "";
}

bool in_family(const Cut& c, CutFamily family) {
  switch (family) {
    case CutFamily::nodal: return c.nodal_cuts.size() == 1 && !c.is_full;
    case CutFamily::left: return !c.is_full;
    case CutFamily::admissible: return !c.is_full && c.is_admissible;
    case CutFamily::full_admissible: return c.is_admissible;
    case CutFamily::word: return c.is_word;
  }
  return false;
}

std::vector<Cut> cuts(const Forest& f, CutFamily family, std::size_t bound) {
  if (f.order() > bound) throw BoundExceeded(f.order(), bound);
  Rooted r(f);
  std::vector<Cut> out;
  for (const auto& raw : enumerate_raw(r, family)) out.push_back(describe(r, raw));
  std::sort(out.begin(), out.end(), address_less);
  return out;
}

std::vector<Cut> nodal_left_cuts(const Forest& f) { return cuts(f, CutFamily::nodal); }
std::vector<Cut> left_cuts(const Forest& f) { return cuts(f, CutFamily::left); }
std::vector<Cut> admissible_left_cuts(const Forest& f) { return cuts(f, CutFamily::admissible); }
std::vector<Cut> full_admissible_left_cuts(const Forest& f) { return cuts(f, CutFamily::full_admissible); }
std::vector<Cut> word_cuts(const Forest& f) { return cuts(f, CutFamily::word); }

CutResult apply_cut(const Forest& f, const Cut& c) {
  Rooted r(f);
  std::vector<std::uint32_t> counts(r.nodes.size(), 0);
  for (const auto& nc : c.nodal_cuts) {
    std::size_t i = r.resolve(nc.node);
    if (nc.count == 0 || nc.count > r.children[i].size())
      throw std::invalid_argument("cut count " + std::to_string(nc.count) + " does not fit node " + format_address(nc.node));
    if (counts[i] != 0) throw std::invalid_argument("two nodal cuts at node " + format_address(nc.node));
    counts[i] = nc.count;
  }
  return CutApplier(r, std::move(counts)).run();
}

std::vector<CutResult> cut_results(const Forest& f, CutFamily family, std::size_t bound) {
  if (f.order() > bound) throw BoundExceeded(f.order(), bound);
  Rooted r(f);
  std::vector<CutResult> out;
  for (const auto& raw : enumerate_raw(r, family)) {
    std::vector<std::uint32_t> counts(r.nodes.size(), 0);
    for (const auto& [p, c] : raw) counts[p] = c;
    out.push_back(CutApplier(r, std::move(counts)).run());
  }
  return out;
}

std::string format_address(const NodeAddress& a) {
  if (a.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(a[i]);
  }
  return s;
}

std::string format_cut(const Cut& c) {
  if (c.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < c.nodal_cuts.size(); ++i) {
    if (i) s += ", ";
    s += format_address(c.nodal_cuts[i].node) + ":" + std::to_string(c.nodal_cuts[i].count);
  }
  return s + "}";
}

}  // namespace otree
