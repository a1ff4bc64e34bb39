//! The interval transducer of a word.
//!
//! States are the intervals `(i, j)` (1-based, inclusive) whose subword is
//! prefix-maximal or suffix-maximal for its content size, plus a shared sink.
//! From `(i, j)` with content size `k > 1`, input 0 moves to the longest
//! interval starting at `i` with `k - 1` letters and emits the letter just after
//! it; input 1 is the mirror image.

use std::collections::VecDeque;

use crate::transducer::{StateId, Transducer, TransducerBuilder};
use crate::words::{Letter, Word};

const NONE: u32 = 0;

/// `rght_k` and `lft_k` for one content size `k`, indexed by 1-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSubwords {
    pub k: usize,
    rght: Vec<u32>,
    lft: Vec<u32>,
}

impl MaximalSubwords {
    /// Largest `j` such that `w[i..=j]` has exactly `k` distinct letters.
    pub fn rght(&self, i: usize) -> Option<usize> {
        self.rght
            .get(i)
            .copied()
            .filter(|&j| j != NONE)
            .map(|j| j as usize)
    }

    /// Smallest `i` such that `w[i..=j]` has exactly `k` distinct letters.
    pub fn lft(&self, j: usize) -> Option<usize> {
        self.lft
            .get(j)
            .copied()
            .filter(|&i| i != NONE)
            .map(|i| i as usize)
    }
}

/// Sliding window over `w` (reversed unless `forward`), recording for each
/// start the furthest end with exactly `k` distinct letters.
fn sweep(w: &[Letter], k: usize, counts: &mut [u32], forward: bool) -> Vec<u32> {
    let n = w.len();
    let at = |p: usize| if forward { w[p] } else { w[n - 1 - p] };
    let mut out = vec![NONE; n + 1];
    let mut distinct = 0;
    let mut end = 0; // window is [start, end)
    for start in 0..n {
        while end < n {
            let c = at(end).index();
            if counts[c] == 0 && distinct == k {
                break;
            }
            if counts[c] == 0 {
                distinct += 1;
            }
            counts[c] += 1;
            end += 1;
        }
        if distinct == k {
            let last = end - 1;
            if forward {
                out[start + 1] = (last + 1) as u32;
            } else {
                out[n - start] = (n - last) as u32;
            }
        }
        let c = at(start).index();
        counts[c] -= 1;
        if counts[c] == 0 {
            distinct -= 1;
        }
    }
    out
}

/// `rght_k` and `lft_k` for a single `k ≥ 1`.
pub fn maximal_subwords(w: &Word, k: usize) -> MaximalSubwords {
    assert!(k >= 1, "content size must be positive");
    let mut counts = vec![0u32; w.alphabet_size()];
    let rght = sweep(w, k, &mut counts, true);
    let lft = sweep(w, k, &mut counts, false);
    MaximalSubwords { k, rght, lft }
}

/// Distinct letters of the whole word, via a counting pass.
fn content_size(w: &[Letter], alphabet: usize) -> usize {
    let mut seen = vec![false; alphabet];
    w.iter()
        .filter(|a| !std::mem::replace(&mut seen[a.index()], true))
        .count()
}

struct Tables {
    n: usize,
    levels: Vec<MaximalSubwords>,
    // state ids of prefix-maximal intervals keyed by (k, i), suffix-maximal by (k, j)
    by_start: Vec<u32>,
    by_end: Vec<u32>,
}

impl Tables {
    fn new(w: &Word) -> Self {
        let n = w.len();
        let kmax = content_size(w, w.alphabet_size());
        let mut counts = vec![0u32; w.alphabet_size()];
        let levels = (1..=kmax)
            .map(|k| MaximalSubwords {
                k,
                rght: sweep(w, k, &mut counts, true),
                lft: sweep(w, k, &mut counts, false),
            })
            .collect();
        Tables {
            n,
            levels,
            by_start: vec![u32::MAX; kmax * (n + 1)],
            by_end: vec![u32::MAX; kmax * (n + 1)],
        }
    }

    fn level(&self, k: usize) -> &MaximalSubwords {
        &self.levels[k - 1]
    }

    fn slot(&mut self, i: usize, j: usize, k: usize) -> &mut u32 {
        let n1 = self.n + 1;
        if self.level(k).lft(j) == Some(i) {
            &mut self.by_end[(k - 1) * n1 + j]
        } else {
            &mut self.by_start[(k - 1) * n1 + i]
        }
    }
}

fn build(w: &Word, full: bool) -> Transducer {
    let n = w.len();
    let mut b = TransducerBuilder::new();
    b.alphabet_size(w.alphabet_size());
    if n == 0 {
        let q = b.add_state(true);
        return b.build(q);
    }
    let mut tables = Tables::new(w);
    let kmax = tables.levels.len();
    let letter = |p: usize| w[p - 1];

    let mut queue: VecDeque<(usize, usize, usize)> = VecDeque::new();
    let intern = |b: &mut TransducerBuilder,
                  tables: &mut Tables,
                  queue: &mut VecDeque<(usize, usize, usize)>,
                  i: usize,
                  j: usize,
                  k: usize| {
        let slot = tables.slot(i, j, k);
        if *slot == u32::MAX {
            *slot = b.add_state(false).0;
            queue.push_back((i, j, k));
        }
        StateId(*slot)
    };

    let initial = intern(&mut b, &mut tables, &mut queue, 1, n, kmax);
    if full {
        for k in 1..=kmax {
            for p in 1..=n {
                if let Some(j) = tables.level(k).rght(p) {
                    intern(&mut b, &mut tables, &mut queue, p, j, k);
                }
                if let Some(i) = tables.level(k).lft(p) {
                    intern(&mut b, &mut tables, &mut queue, i, p, k);
                }
            }
        }
    }
    let sink = b.add_state(true);
    while let Some((i, j, k)) = queue.pop_front() {
        let q = StateId(*tables.slot(i, j, k));
        if k == 1 {
            b.set_edge(q, 0, sink, letter(i));
            b.set_edge(q, 1, sink, letter(i));
            continue;
        }
        let j0 = tables.level(k - 1).rght(i).expect("shorter prefix exists");
        let i1 = tables.level(k - 1).lft(j).expect("shorter suffix exists");
        let t0 = intern(&mut b, &mut tables, &mut queue, i, j0, k - 1);
        let t1 = intern(&mut b, &mut tables, &mut queue, i1, j, k - 1);
        b.set_edge(q, 0, t0, letter(j0 + 1));
        b.set_edge(q, 1, t1, letter(i1 - 1));
    }
    b.build(initial)
}

/// The interval transducer of `w`, restricted to states reachable from `(1, |w|)`.
/// It realizes `f_w` and has at most `2·|A|·|w| + 1` states.
pub fn interval_transducer(w: &Word) -> Transducer {
    build(w, false)
}

/// The interval transducer with every prefix- or suffix-maximal interval as a
/// state, reachable or not.
pub fn interval_transducer_full(w: &Word) -> Transducer {
    build(w, true)
}
