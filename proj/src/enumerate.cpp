#include "plrc/enumerate.hpp"

#include <algorithm>

namespace plrc {

MaxEnumerator::MaxEnumerator(const Word& w, int k)
    : word_(w),
      k_(k),
      tables_(compute_longest_tables(w, k)),
      counts_(compute_rollercoaster_table(w, k, tables_)),
      graph_(build_neg(w, tables_.predecessors())),
      n_(w.size()) {
  m_ = longest_length(tables_);
  total_ = count_maximum_rollercoasters(tables_, counts_);
  if (m_ == 0) done_ = true;
}

MaxEnumerator::Cursor MaxEnumerator::make_cursor(Pos at, const State& st, int ell) const {
  Cursor cur;
  cur.at = at;
  cur.ell = ell;
  cur.entered = st;
  if (st.unary) {
    cur.a_active = false;
    cur.b_active = ell >= 2;
    return cur;
  }
  if (st.h >= 2) {
    cur.scan_xi = st.xi;
    cur.a_active = true;
    return cur;
  }
  // h == 1: scan under the opposite complete cell when its length matches;
  // the pure-unary slot stands on its own
  cur.scan_xi = opposite(st.xi);
  cur.a_active = tables_.value(cur.scan_xi, k_, at) == ell;
  cur.b_active = ell >= 2 && tables_.unary_len(at) == ell;
  return cur;
}

std::optional<MaxEnumerator::Candidate> MaxEnumerator::cursor_next(Cursor& cur) {
  const int scan_h = cur.entered.unary ? 0 : (cur.entered.h >= 2 ? cur.entered.h : k_);
  const Pos eq_src = graph_.in_eq(cur.at);
  const std::vector<Pos>* strict =
      cur.a_active ? (cur.scan_xi == Orientation::Up ? &graph_.in_up(cur.at)
                                                     : &graph_.in_down(cur.at))
                   : nullptr;

  for (;;) {
    if (cur.entered.unary) {
      if (cur.b_done || !cur.b_active) return std::nullopt;
      cur.b_done = true;
      return Candidate{eq_src, {cur.entered.xi, 1, true}};
    }

    // pending second option at the current strict source
    if (cur.substep == 1) {
      cur.substep = 0;
      const Pos src = (*strict)[cur.strict_idx - 1];
      return Candidate{src, {cur.scan_xi, k_ - 1, false}};
    }

    const Pos next_strict =
        (strict && cur.strict_idx < strict->size()) ? (*strict)[cur.strict_idx] : 0;

    // the Eq slot (and for h == 1 the unary slot right behind it) comes when
    // the strict scan passes its source
    if (!cur.eq_done && eq_src != 0 && eq_src > next_strict) {
      cur.eq_done = true;
      if (cur.a_active) return Candidate{eq_src, {cur.scan_xi, scan_h, false}};
      // no edge scan: fall through to the unary slot
    }
    if (cur.eq_done && cur.b_active && !cur.b_done) {
      cur.b_done = true;
      return Candidate{eq_src, {cur.entered.xi, 1, true}};
    }
    if (next_strict == 0) return std::nullopt;

    ++cur.strict_idx;
    if (scan_h == k_) cur.substep = 1;  // try (xi, k) first, then (xi, k-1)
    const int h_first = scan_h == k_ ? k_ : scan_h - 1;
    return Candidate{next_strict, {cur.scan_xi, h_first, false}};
  }
}

bool MaxEnumerator::candidate_valid(const Candidate& c, int ell_pred) {
  ++checks_;
  if (c.src == 0) return false;
  if (c.state.unary) {
    return tables_.unary_len(c.src) == ell_pred &&
           tables_.value(c.state.xi, 1, c.src) == ell_pred;
  }
  return tables_.value(c.state.xi, c.state.h, c.src) == ell_pred;
}

bool MaxEnumerator::fill_down(int from) {
  for (int j = from; j >= 2; --j) {
    cursors_[static_cast<size_t>(j)] = make_cursor(idx_[static_cast<size_t>(j)],
                                                   states_[static_cast<size_t>(j)], j);
    std::optional<Candidate> cand;
    while ((cand = cursor_next(cursors_[static_cast<size_t>(j)]))) {
      if (candidate_valid(*cand, j - 1)) break;
    }
    if (!cand) return false;
    idx_[static_cast<size_t>(j - 1)] = cand->src;
    states_[static_cast<size_t>(j - 1)] = cand->state;
  }
  return true;
}

bool MaxEnumerator::advance_seed() {
  const PredecessorTable& pred = tables_.predecessors();
  // seeds iterate (letter ascending) x (Up, Down); maximum-length words can
  // only end at a last occurrence whose complete cell equals m
  if (!started_) {
    started_ = true;
    seed_letter_ = 1;
    seed_xi_ = 0;
  } else if (seed_xi_ == 0) {
    seed_xi_ = 1;
  } else {
    seed_xi_ = 0;
    ++seed_letter_;
  }
  while (seed_letter_ <= pred.sigma()) {
    ++checks_;
    const Pos at = pred.last(n_, seed_letter_);
    if (at != 0) {
      const Orientation xi = seed_xi_ == 0 ? Orientation::Up : Orientation::Down;
      if (tables_.value(xi, k_, at) == m_) return true;
    }
    if (at == 0 || seed_xi_ == 1) {
      seed_xi_ = 0;
      ++seed_letter_;
    } else {
      seed_xi_ = 1;
    }
  }
  return false;
}

bool MaxEnumerator::seed_walk() {
  const PredecessorTable& pred = tables_.predecessors();
  const Pos at = pred.last(n_, seed_letter_);
  const Orientation xi = seed_xi_ == 0 ? Orientation::Up : Orientation::Down;
  idx_.assign(static_cast<size_t>(m_) + 1, 0);
  states_.assign(static_cast<size_t>(m_) + 1, {});
  cursors_.assign(static_cast<size_t>(m_) + 1, {});
  c_.assign(static_cast<size_t>(m_) + 1, BigInt(0));
  idx_[static_cast<size_t>(m_)] = at;
  states_[static_cast<size_t>(m_)] = {xi, k_, false};
  return fill_down(m_);
}

void MaxEnumerator::note_emission(int pivot) {
  for (int j = 1; j <= m_; ++j) {
    if (j < pivot)
      c_[static_cast<size_t>(j)] = 1;
    else
      c_[static_cast<size_t>(j)] += 1;
  }
  last_delay_ = checks_;
  max_delay_ = std::max(max_delay_, checks_);
  checks_ = 0;
}

std::optional<Word> MaxEnumerator::next() {
  if (done_) return std::nullopt;

  if (k_ == 1) {
    // every word is a plateau-1-rollercoaster; the unique maximum is w itself
    if (k1_emitted_) return std::nullopt;
    k1_emitted_ = true;
    done_ = true;
    last_delay_ = max_delay_ = 1;
    return word_;
  }

  auto spell = [&]() {
    std::vector<Letter> letters;
    letters.reserve(static_cast<size_t>(m_));
    for (int j = 1; j <= m_; ++j) letters.push_back(word_.at(idx_[static_cast<size_t>(j)]));
    return Word(std::move(letters), word_.sigma());
  };

  if (!started_) {
    if (!advance_seed()) {
      done_ = true;
      return std::nullopt;
    }
    if (!seed_walk()) throw error(errc::internal, "no walk below a counted seed");
    note_emission(m_ + 1);
    return spell();
  }

  // pivot: shallowest position whose prefix pool is not exhausted
  int pivot = 0;
  for (int j = 1; j <= m_; ++j) {
    ++checks_;
    const State& st = states_[static_cast<size_t>(j)];
    const BigInt avail =
        st.unary ? BigInt(1) : counts_.count(idx_[static_cast<size_t>(j)], st.xi, st.h);
    if (c_[static_cast<size_t>(j)] < avail) {
      pivot = j;
      break;
    }
  }

  if (pivot == 0) {
    if (!advance_seed()) {
      done_ = true;
      return std::nullopt;
    }
    if (!seed_walk()) throw error(errc::internal, "no walk below a counted seed");
    note_emission(m_ + 1);
    return spell();
  }

  std::optional<Candidate> cand;
  while ((cand = cursor_next(cursors_[static_cast<size_t>(pivot)]))) {
    if (candidate_valid(*cand, pivot - 1)) break;
  }
  if (!cand) throw error(errc::internal, "counter promised an unemitted word but none found");
  idx_[static_cast<size_t>(pivot - 1)] = cand->src;
  states_[static_cast<size_t>(pivot - 1)] = cand->state;
  if (!fill_down(pivot - 1)) throw error(errc::internal, "rebuilt prefix has no completion");
  note_emission(pivot);
  return spell();
}

std::vector<Word> enumerate_maximum(const Word& w, int k, std::optional<size_t> limit) {
  std::vector<Word> out;
  if (w.empty()) return out;
  MaxEnumerator e(w, k);
  while (!limit || out.size() < *limit) {
    std::optional<Word> item = e.next();
    if (!item) break;
    out.push_back(std::move(*item));
  }
  return out;
}

}  // namespace plrc
