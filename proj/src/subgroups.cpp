#include "fpg/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fpg {

namespace {

constexpr std::int32_t kUndef = -1;

// Column encoding: generator g occupies columns 2g (action of g) and 2g+1
// (action of g^-1).
inline int inverse_column(int col) { return col ^ 1; }

std::vector<int> flatten_word(const Word& w, const Presentation& p,
                              const char* what) {
  std::vector<int> out;
  for (const Letter& l : w.letters()) {
    const auto idx = p.generator_index(l.gen);
    if (!idx)
      throw std::invalid_argument(std::string(what) + " uses unknown generator '" +
                                  l.gen.name + "'");
    out.push_back(static_cast<int>(*idx) * 2 + (l.sign > 0 ? 0 : 1));
  }
  return out;
}

using Row = std::vector<std::int32_t>;

// BFS renumbering of a complete table from the given basepoint, scanning
// columns in order (generator, inverse, next generator, ...). Returns the
// renumbered rows.
std::vector<Row> standardize_rows(const std::vector<Row>& rows, int ncols,
                                  std::int32_t basepoint) {
  const std::size_t d = rows.size();
  std::vector<std::int32_t> number(d, kUndef);
  std::vector<std::int32_t> order;
  order.reserve(d);
  number[static_cast<std::size_t>(basepoint)] = 0;
  order.push_back(basepoint);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int col = 0; col < ncols; ++col) {
      const std::int32_t target = rows[static_cast<std::size_t>(order[i])]
                                      [static_cast<std::size_t>(col)];
      if (number[static_cast<std::size_t>(target)] == kUndef) {
        number[static_cast<std::size_t>(target)] =
            static_cast<std::int32_t>(order.size());
        order.push_back(target);
      }
    }
  }
  if (order.size() != d)
    throw std::logic_error("coset table is not transitive");
  std::vector<Row> out(d, Row(static_cast<std::size_t>(ncols)));
  for (std::size_t c = 0; c < d; ++c)
    for (int col = 0; col < ncols; ++col)
      out[static_cast<std::size_t>(number[c])][static_cast<std::size_t>(col)] =
          number[static_cast<std::size_t>(rows[c][static_cast<std::size_t>(col)])];
  return out;
}

std::vector<std::int32_t> flat_of_rows(const std::vector<Row>& rows, int ncols) {
  std::vector<std::int32_t> out;
  out.reserve(rows.size() * static_cast<std::size_t>(ncols) / 2);
  for (const Row& row : rows)
    for (int col = 0; col < ncols; col += 2)
      out.push_back(row[static_cast<std::size_t>(col)]);
  return out;
}

// HLT-style enumerator: scan subgroup generators at coset 0, then scan every
// relator at every live coset (filling gaps with new cosets), then complete
// each row. Coincidences merge onto the smaller index, so coset 0 survives.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::span<const Word> subgroup_generators,
             std::int64_t max_cosets)
      : ncols_(static_cast<int>(p.generator_count()) * 2),
        max_cosets_(max_cosets) {
    if (max_cosets_ < 1)
      throw std::invalid_argument("max_cosets must be >= 1");
    for (const Word& r : p.relators)
      relators_.push_back(flatten_word(r, p, "relator"));
    for (const Word& w : subgroup_generators)
      subgroup_words_.push_back(flatten_word(w, p, "subgroup generator"));
    new_coset();
  }

  void run() {
    for (const auto& w : subgroup_words_)
      if (!w.empty()) scan_and_fill(0, w);
    for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
      if (!alive(static_cast<std::int32_t>(alpha))) continue;
      for (const auto& rel : relators_) {
        scan_and_fill(static_cast<std::int32_t>(alpha), rel);
        if (!alive(static_cast<std::int32_t>(alpha))) break;
      }
      if (!alive(static_cast<std::int32_t>(alpha))) continue;
      for (int col = 0; col < ncols_; ++col)
        if (entry(static_cast<std::int32_t>(alpha), col) == kUndef)
          define(static_cast<std::int32_t>(alpha), col);
    }
  }

  // Live rows with every entry resolved to its representative, renumbered
  // compactly with coset 0 first (in live order; standardization follows).
  std::vector<Row> live_rows() const {
    std::vector<std::int32_t> compact(table_.size(), kUndef);
    std::vector<std::int32_t> live;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (parent_[c] != static_cast<std::int32_t>(c)) continue;
      compact[c] = static_cast<std::int32_t>(live.size());
      live.push_back(static_cast<std::int32_t>(c));
    }
    std::vector<Row> rows(live.size(), Row(static_cast<std::size_t>(ncols_)));
    for (std::size_t i = 0; i < live.size(); ++i)
      for (int col = 0; col < ncols_; ++col) {
        const std::int32_t target =
            table_[static_cast<std::size_t>(live[i])][static_cast<std::size_t>(col)];
        if (target == kUndef)
          throw std::logic_error("incomplete coset table after enumeration");
        rows[i][static_cast<std::size_t>(col)] = compact[static_cast<std::size_t>(
            find(target))];
      }
    return rows;
  }

 private:
  std::int32_t find(std::int32_t c) const {
    while (parent_[static_cast<std::size_t>(c)] != c)
      c = parent_[static_cast<std::size_t>(c)];
    return c;
  }

  bool alive(std::int32_t c) const {
    return parent_[static_cast<std::size_t>(c)] == c;
  }

  std::int32_t& entry(std::int32_t coset, int col) {
    return table_[static_cast<std::size_t>(coset)][static_cast<std::size_t>(col)];
  }

  std::int32_t new_coset() {
    table_.emplace_back(static_cast<std::size_t>(ncols_), kUndef);
    parent_.push_back(static_cast<std::int32_t>(table_.size() - 1));
    ++live_;
    if (live_ > max_cosets_)
      throw EnumerationOverflow(
          "coset enumeration exceeded " + std::to_string(max_cosets_) +
          " live cosets (possibly infinite index or insufficient budget)");
    return static_cast<std::int32_t>(table_.size() - 1);
  }

  std::int32_t define(std::int32_t coset, int col) {
    const std::int32_t fresh = new_coset();
    entry(coset, col) = fresh;
    entry(fresh, inverse_column(col)) = coset;
    return fresh;
  }

  void set_pair(std::int32_t from, int col, std::int32_t to) {
    entry(from, col) = to;
    entry(to, inverse_column(col)) = from;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    merge_queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!merge_queue_.empty()) {
      const std::int32_t dead = merge_queue_.front();
      merge_queue_.pop_front();
      for (int col = 0; col < ncols_; ++col) {
        const std::int32_t target = entry(dead, col);
        if (target == kUndef) continue;
        entry(dead, col) = kUndef;
        if (entry(target, inverse_column(col)) == dead)
          entry(target, inverse_column(col)) = kUndef;
        const std::int32_t mu = find(dead);
        const std::int32_t nu = find(target);
        if (entry(mu, col) != kUndef)
          merge(nu, entry(mu, col));
        else if (entry(nu, inverse_column(col)) != kUndef)
          merge(mu, entry(nu, inverse_column(col)));
        else
          set_pair(mu, col, nu);
      }
    }
  }

  void scan_and_fill(std::int32_t alpha, const std::vector<int>& word) {
    std::int32_t forward = alpha;
    std::int32_t backward = alpha;
    std::size_t i = 0;
    std::size_t j = word.size();  // one past the last unapplied backward letter
    for (;;) {
      while (i < j && entry(forward, word[i]) != kUndef)
        forward = entry(forward, word[i++]);
      if (i == j) {
        if (forward != backward) coincidence(forward, backward);
        return;
      }
      while (j > i && entry(backward, inverse_column(word[j - 1])) != kUndef)
        backward = entry(backward, inverse_column(word[--j]));
      if (j == i) {
        coincidence(forward, backward);
        return;
      }
      if (j == i + 1) {
        set_pair(forward, word[i], backward);
        return;
      }
      define(forward, word[i]);
    }
  }

  int ncols_;
  std::int64_t max_cosets_;
  std::int64_t live_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_words_;
  std::vector<Row> table_;
  std::vector<std::int32_t> parent_;
  std::deque<std::int32_t> merge_queue_;
};

}  // namespace

// Internal assembly point: standardizes raw complete rows and produces an
// immutable table.
class CosetTableBuilder {
 public:
  static CosetTable build(const Presentation& p,
                          std::vector<Word> subgroup_generators,
                          const std::vector<Row>& rows) {
    const int ncols = static_cast<int>(p.generator_count()) * 2;
    const std::vector<Row> standard = standardize_rows(rows, ncols, 0);
    CosetTable t;
    t.base_ = p;
    t.subgroup_generators_ = std::move(subgroup_generators);
    t.size_ = standard.size();
    t.action_.assign(p.generator_count(), Row(standard.size()));
    t.inverse_.assign(p.generator_count(), Row(standard.size()));
    for (std::size_t c = 0; c < standard.size(); ++c)
      for (std::size_t g = 0; g < p.generator_count(); ++g) {
        const std::int32_t img = standard[c][2 * g];
        t.action_[g][c] = img;
        t.inverse_[g][static_cast<std::size_t>(img)] =
            static_cast<std::int32_t>(c);
      }
    return t;
  }
};

std::int64_t CosetTable::image(std::int64_t coset, std::size_t generator,
                               int sign) const {
  const auto& column = sign > 0 ? action_ : inverse_;
  return column[generator][static_cast<std::size_t>(coset)];
}

std::int64_t CosetTable::trace(std::int64_t start, const Word& w) const {
  std::int64_t current = start;
  for (const Letter& l : w.letters()) {
    const auto idx = base_.generator_index(l.gen);
    if (!idx)
      throw std::invalid_argument("word uses unknown generator '" + l.gen.name +
                                  "'");
    current = image(current, *idx, l.sign);
  }
  return current;
}

void CosetTable::validate() const {
  for (std::size_t g = 0; g < base_.generator_count(); ++g) {
    std::vector<bool> seen(size_, false);
    for (std::size_t c = 0; c < size_; ++c) {
      const std::int32_t img = action_[g][c];
      if (img < 0 || static_cast<std::size_t>(img) >= size_ ||
          seen[static_cast<std::size_t>(img)])
        throw std::logic_error("generator action is not a permutation");
      seen[static_cast<std::size_t>(img)] = true;
      if (inverse_[g][static_cast<std::size_t>(img)] !=
          static_cast<std::int32_t>(c))
        throw std::logic_error("inverse action mismatch");
    }
  }
  for (const Word& r : base_.relators)
    for (std::size_t c = 0; c < size_; ++c)
      if (trace(static_cast<std::int64_t>(c), r) != static_cast<std::int64_t>(c))
        throw std::logic_error("relator does not act trivially");
  for (const Word& w : subgroup_generators_)
    if (trace(0, w) != 0)
      throw std::logic_error("subgroup generator does not fix coset 0");
}

std::vector<std::int32_t> CosetTable::flat() const {
  std::vector<std::int32_t> out;
  out.reserve(size_ * base_.generator_count());
  for (std::size_t c = 0; c < size_; ++c)
    for (std::size_t g = 0; g < base_.generator_count(); ++g)
      out.push_back(action_[g][c]);
  return out;
}

CosetTable coset_enumerate(const Presentation& p,
                           std::span<const Word> subgroup_generators,
                           std::int64_t max_cosets) {
  Enumerator enumerator(p, subgroup_generators, max_cosets);
  enumerator.run();
  CosetTable t = CosetTableBuilder::build(
      p, std::vector<Word>(subgroup_generators.begin(), subgroup_generators.end()),
      enumerator.live_rows());
  t.validate();
  return t;
}

namespace {

// Backtracking low-index search over standardized partial tables: assign the
// first undefined slot, propagate forced deductions from relator scans, and
// prune on contradiction. Every definition links a new coset to coset 0's
// component, so complete tables are transitive.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::int64_t max_index)
      : presentation_(p),
        ncols_(static_cast<int>(p.generator_count()) * 2),
        max_index_(max_index) {
    if (max_index_ < 1)
      throw std::invalid_argument("max_index must be >= 1");
    for (const Word& r : p.relators)
      relators_.push_back(flatten_word(r, p, "relator"));
    table_.emplace_back(static_cast<std::size_t>(ncols_), kUndef);
  }

  std::vector<std::vector<Row>> run() {
    search();
    return std::move(results_);
  }

 private:
  struct Assignment {
    std::int32_t coset;
    int col;
  };

  void assign(std::int32_t coset, int col, std::int32_t target,
              std::vector<Assignment>& log) {
    table_[static_cast<std::size_t>(coset)][static_cast<std::size_t>(col)] = target;
    log.push_back({coset, col});
    table_[static_cast<std::size_t>(target)][static_cast<std::size_t>(
        inverse_column(col))] = coset;
    log.push_back({target, inverse_column(col)});
  }

  void undo(const std::vector<Assignment>& log, bool created_row) {
    for (auto it = log.rbegin(); it != log.rend(); ++it)
      table_[static_cast<std::size_t>(it->coset)][static_cast<std::size_t>(it->col)] =
          kUndef;
    if (created_row) table_.pop_back();
  }

  // Relator-scan fixpoint. Scans never create cosets here; a gap of one
  // forces the entry, a closed mismatching scan is a contradiction.
  bool propagate(std::vector<Assignment>& log) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < table_.size(); ++c) {
        for (const auto& word : relators_) {
          std::int32_t forward = static_cast<std::int32_t>(c);
          std::int32_t backward = static_cast<std::int32_t>(c);
          std::size_t i = 0;
          std::size_t j = word.size();
          while (i < j) {
            const std::int32_t next =
                table_[static_cast<std::size_t>(forward)]
                      [static_cast<std::size_t>(word[i])];
            if (next == kUndef) break;
            forward = next;
            ++i;
          }
          if (i == j) {
            if (forward != backward) return false;
            continue;
          }
          while (j > i) {
            const std::int32_t prev =
                table_[static_cast<std::size_t>(backward)][static_cast<std::size_t>(
                    inverse_column(word[j - 1]))];
            if (prev == kUndef) break;
            backward = prev;
            --j;
          }
          if (j == i) return false;
          if (j == i + 1) {
            assign(forward, word[i], backward, log);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool find_first_undefined(std::int32_t& coset, int& col) const {
    for (std::size_t c = 0; c < table_.size(); ++c)
      for (int k = 0; k < ncols_; ++k)
        if (table_[c][static_cast<std::size_t>(k)] == kUndef) {
          coset = static_cast<std::int32_t>(c);
          col = k;
          return true;
        }
    return false;
  }

  void search() {
    if (++nodes_ > kNodeBudget)
      throw EnumerationOverflow("low-index search budget exceeded");
    std::int32_t coset = 0;
    int col = 0;
    if (!find_first_undefined(coset, col)) {
      results_.push_back(table_);
      return;
    }
    const std::int32_t count = static_cast<std::int32_t>(table_.size());
    for (std::int32_t target = 0; target <= count; ++target) {
      const bool fresh = target == count;
      if (fresh) {
        if (count >= max_index_) break;
        table_.emplace_back(static_cast<std::size_t>(ncols_), kUndef);
      } else if (table_[static_cast<std::size_t>(target)][static_cast<std::size_t>(
                     inverse_column(col))] != kUndef) {
        continue;
      }
      std::vector<Assignment> log;
      assign(coset, col, target, log);
      if (propagate(log)) search();
      undo(log, fresh);
    }
  }

  const Presentation& presentation_;
  int ncols_;
  std::int64_t max_index_;
  std::vector<std::vector<int>> relators_;
  std::vector<Row> table_;
  std::vector<std::vector<Row>> results_;
  std::int64_t nodes_ = 0;
  static constexpr std::int64_t kNodeBudget = 20'000'000;
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& p,
                                            std::int64_t max_index) {
  LowIndexSearch search(p, max_index);
  const int ncols = static_cast<int>(p.generator_count()) * 2;

  // Conjugate subgroups differ only by the basepoint; the canonical class
  // representative is the basepoint renumbering with the smallest flat form.
  std::set<std::vector<std::int32_t>> seen;
  std::vector<std::pair<std::vector<std::int32_t>, std::vector<Row>>> chosen;
  for (const std::vector<Row>& rows : search.run()) {
    std::vector<std::int32_t> best_flat;
    std::vector<Row> best_rows;
    for (std::int32_t base = 0; base < static_cast<std::int32_t>(rows.size());
         ++base) {
      std::vector<Row> candidate = standardize_rows(rows, ncols, base);
      std::vector<std::int32_t> flat = flat_of_rows(candidate, ncols);
      if (best_flat.empty() || flat < best_flat) {
        best_flat = std::move(flat);
        best_rows = std::move(candidate);
      }
    }
    if (seen.insert(best_flat).second)
      chosen.emplace_back(std::move(best_flat), std::move(best_rows));
  }

  std::sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size())
      return a.second.size() < b.second.size();
    return a.first < b.first;
  });

  std::vector<CosetTable> out;
  out.reserve(chosen.size());
  for (auto& [flat, rows] : chosen) {
    CosetTable t = CosetTableBuilder::build(p, {}, rows);
    t.subgroup_generators_ = reidemeister_schreier(p, t).generator_images;
    t.validate();
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t RewrittenPresentation::trivial_relator_count() const {
  return static_cast<std::size_t>(
      std::count_if(relators.begin(), relators.end(),
                    [](const Word& w) { return w.empty(); }));
}

Presentation RewrittenPresentation::simplified(std::string label) const {
  std::vector<Word> kept;
  kept.reserve(relators.size());
  for (const Word& r : relators)
    if (!r.empty()) kept.push_back(r);
  return Presentation::make(generators, std::move(kept), std::move(label));
}

RewrittenPresentation reidemeister_schreier(const Presentation& p,
                                            const CosetTable& table) {
  if (!(table.base() == p))
    throw std::invalid_argument(
        "coset table does not belong to this presentation");
  const std::size_t d = static_cast<std::size_t>(table.index());
  const std::size_t n = p.generator_count();

  // Breadth-first Schreier transversal; standardization makes discovery
  // order coincide with coset numbering.
  std::vector<Word> transversal(d);
  std::vector<bool> discovered(d, false);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(d, false));
  discovered[0] = true;
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    if (!discovered[alpha])
      throw std::logic_error("coset table is not standardized");
    for (std::size_t g = 0; g < n; ++g) {
      for (const int sign : {1, -1}) {
        const auto beta = static_cast<std::size_t>(
            table.image(static_cast<std::int64_t>(alpha), g, sign));
        if (discovered[beta]) continue;
        discovered[beta] = true;
        transversal[beta] =
            transversal[alpha] * Word::single(p.generators[g], sign);
        if (sign > 0)
          tree[g][alpha] = true;
        else
          tree[g][beta] = true;
      }
    }
  }

  RewrittenPresentation out;
  out.transversal = transversal;
  std::vector<std::vector<std::int64_t>> schreier_id(
      n, std::vector<std::int64_t>(d, -1));
  for (std::size_t alpha = 0; alpha < d; ++alpha) {
    for (std::size_t g = 0; g < n; ++g) {
      if (tree[g][alpha]) continue;
      schreier_id[g][alpha] = static_cast<std::int64_t>(out.generators.size());
      out.generators.push_back(
          {"s" + std::to_string(out.generators.size() + 1)});
      const auto beta = static_cast<std::size_t>(
          table.image(static_cast<std::int64_t>(alpha), g, 1));
      out.generator_images.push_back(transversal[alpha] *
                                     Word::single(p.generators[g]) *
                                     transversal[beta].inverse());
    }
  }

  for (const Word& relator : p.relators) {
    for (std::size_t alpha = 0; alpha < d; ++alpha) {
      Word rewritten;
      std::int64_t current = static_cast<std::int64_t>(alpha);
      for (const Letter& l : relator.letters()) {
        const std::size_t g = *p.generator_index(l.gen);
        if (l.sign > 0) {
          const std::int64_t id = schreier_id[g][static_cast<std::size_t>(current)];
          if (id >= 0)
            rewritten *= Word::single(out.generators[static_cast<std::size_t>(id)]);
          current = table.image(current, g, 1);
        } else {
          const std::int64_t source = table.image(current, g, -1);
          const std::int64_t id = schreier_id[g][static_cast<std::size_t>(source)];
          if (id >= 0)
            rewritten *=
                Word::single(out.generators[static_cast<std::size_t>(id)], -1);
          current = source;
        }
      }
      out.relators.push_back(std::move(rewritten));
    }
  }
  return out;
}

RSCounts rs_counts(std::int64_t a, std::int64_t b, std::int64_t d) {
  if (a < 1) throw std::invalid_argument("rs_counts requires a >= 1");
  if (b < 0) throw std::invalid_argument("rs_counts requires b >= 0");
  if (d < 1) throw std::invalid_argument("rs_counts requires d >= 1");
  return RSCounts{(a - 1) * d + 1, b * d, (a - b - 1) * d + 1};
}

}  // namespace fpg
