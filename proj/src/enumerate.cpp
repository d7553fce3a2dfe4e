#include "otree/enumerate.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

namespace otree {
namespace {

// Non-owning callable reference; the generator below nests continuations
// deeply and std::function would allocate for each of them.
class Continuation {
 public:
  template <class F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, Continuation>)
  Continuation(F& f)  // NOLINT
      : obj_(&f), call_([](void* o) { (*static_cast<F*>(o))(); }) {}
  void operator()() const { call_(obj_); }

 private:
  void* obj_;
  void (*call_)(void*);
};

class Generator {
 public:
  Generator(std::vector<ColorId> colors, bool trees_only, const std::function<void(NodeSpan)>& visit,
            ForestFilter filter)
      : colors_(std::move(colors)), trees_only_(trees_only), visit_(visit), filter_(filter) {}

  void run(std::size_t n) {
    auto emit = [this] {
      if (filter_ == ForestFilter::all || filter_ == ForestFilter::trees || passes_filter(buf_, filter_))
        visit_(buf_);
    };
    if (trees_only_) {
      if (n == 0) return;
      Continuation k(emit);
      tree(n, k);
    } else {
      Continuation k(emit);
      forest(n, k);
    }
  }

 private:
  // Appends each forest of exactly n nodes in canonical order, calling
  // `next` with the buffer extended; the buffer is restored on return.
  void forest(std::size_t n, Continuation next) {
    if (n == 0) {
      next();
      return;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t rest = n - k;
      auto after_tree = [this, rest, next] { forest(rest, next); };
      tree(k, Continuation(after_tree));
    }
  }

  void tree(std::size_t k, Continuation next) {
    for (ColorId c : colors_) {
      std::size_t mark = buf_.size();
      buf_.push_back(Node{c, static_cast<std::uint32_t>(k)});
      forest(k - 1, next);
      buf_.resize(mark);
    }
  }

  std::vector<ColorId> colors_;
  bool trees_only_;
  const std::function<void(NodeSpan)>& visit_;
  ForestFilter filter_;
  std::vector<Node> buf_;
};

std::vector<ColorId> sorted_unique(const std::vector<Color>& colors) {
  std::vector<Color> c = colors;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::vector<ColorId> ids;
  for (Color x : c) ids.push_back(x.id());
  return ids;
}

}  // namespace

ForestFilter parse_forest_filter(std::string_view name) {
  if (name == "all") return ForestFilter::all;
  if (name == "trees") return ForestFilter::trees;
  if (name == "tall") return ForestFilter::tall;
  if (name == "bushy") return ForestFilter::bushy;
  throw std::invalid_argument("unknown filter '" + std::string(name) + "'");
}

BoundExceeded::BoundExceeded(std::size_t requested, std::size_t bound)
    : std::runtime_error("order " + std::to_string(requested) + " exceeds the enumeration bound " +
                         std::to_string(bound)) {}

bool passes_filter(NodeSpan forest, ForestFilter filter) {
  switch (filter) {
    case ForestFilter::all:
      return true;
    case ForestFilter::trees:
      return !forest.empty() && forest[0].size == forest.size();
    case ForestFilter::tall:
      for (std::size_t i = 0; i < forest.size(); ++i)
        if (child_count(forest, i) > 1) return false;
      return true;
    case ForestFilter::bushy:
      for (NodeSpan t : split_trees(forest))
        for (std::size_t i = 1; i < t.size(); ++i)
          if (t[i].size != 1) return false;
      return true;
  }
  return false;
}

void for_each_forest(std::size_t n, const std::vector<Color>& colors, ForestFilter filter,
                     const std::function<void(NodeSpan)>& visit, std::size_t bound) {
  if (n > bound) throw BoundExceeded(n, bound);
  if (colors.empty()) {
    if (n == 0 && filter != ForestFilter::trees) visit(NodeSpan());
    return;
  }
  Generator g(sorted_unique(colors), filter == ForestFilter::trees, visit, filter);
  g.run(n);
}

std::vector<Forest> enumerate_forests(std::size_t n, const std::vector<Color>& colors, ForestFilter filter,
                                      std::size_t bound) {
  std::vector<Forest> out;
  for_each_forest(
      n, colors, filter,
      [&](NodeSpan f) {
        ForestBuilder b(f.size());
        b.append(f);
        out.push_back(std::move(b).build());
      },
      bound);
  return out;
}

std::vector<Forest> enumerate_forests_upto(std::size_t max_order, const std::vector<Color>& colors,
                                           ForestFilter filter, std::size_t bound) {
  if (max_order > bound) throw BoundExceeded(max_order, bound);
  std::vector<Forest> out;
  for (std::size_t n = 0; n <= max_order; ++n) {
    auto level = enumerate_forests(n, colors, filter, bound);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

std::size_t count_forests(std::size_t n, const std::vector<Color>& colors, ForestFilter filter, std::size_t bound) {
  std::size_t count = 0;
  for_each_forest(n, colors, filter, [&](NodeSpan) { ++count; }, bound);
  return count;
}

}  // namespace otree
