//! Deterministic synchronous transducers with input alphabet `{0, 1}`.
//!
//! A transition on input bit `b` from state `q` either is undefined or carries
//! both a target state and an output letter, so the state and letter transition
//! functions are defined on exactly the same pairs.
//!
//! The transducers built by this crate are acyclic and have uniform depth: the
//! *level* of a state is the common length of every path from it to a terminal
//! state. For a transducer representing a free band element `x`, the level of the
//! state reached by `α` is `|cont(x∘α)|`.

mod text;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::words::{content, Bits, Letter, Word};

pub use text::{parse_fbt, to_dot, to_fbt};

const NO_STATE: u32 = u32::MAX;

/// Upper bound on `|cont(w)|` for exhaustive checks such as [`View::realizes`].
pub const REALIZE_BUDGET: usize = 20;

/// Dense index of a state within its transducer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub u32);

impl StateId {
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A defined transition: target state and emitted letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub target: StateId,
    pub out: Letter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct State {
    pub(crate) terminal: bool,
    pub(crate) next: [u32; 2],
    pub(crate) out: [u32; 2],
}

impl State {
    const fn new(terminal: bool) -> Self {
        State {
            terminal,
            next: [NO_STATE; 2],
            out: [0; 2],
        }
    }

    fn edge(&self, bit: u8) -> Option<Edge> {
        let b = bit as usize & 1;
        (self.next[b] != NO_STATE).then(|| Edge {
            target: StateId(self.next[b]),
            out: Letter(self.out[b]),
        })
    }

    fn edge_count(&self) -> usize {
        self.next.iter().filter(|&&n| n != NO_STATE).count()
    }
}

/// A structural defect reported by [`Transducer::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("initial state {0} is out of range")]
    InitialOutOfRange(u32),
    #[error("transition {bit} of state {state} targets missing state {target}")]
    TargetOutOfRange { state: u32, bit: u8, target: u32 },
    #[error("transition {bit} of state {state} emits letter {letter} outside the alphabet")]
    LetterOutOfRange { state: u32, bit: u8, letter: u32 },
    #[error("state {0} lies on a cycle")]
    Cycle(u32),
    #[error("non-terminal state {0} does not define both transitions")]
    PartialTransitions(u32),
    #[error("terminal state {0} has outgoing transitions")]
    TerminalWithTransitions(u32),
    #[error("the two transitions of state {0} lead to different depths")]
    UnevenDepth(u32),
}

/// An immutable transducer. Build one with [`TransducerBuilder`].
#[derive(Clone)]
pub struct Transducer {
    pub(crate) states: Vec<State>,
    pub(crate) initial: u32,
    alphabet_size: u32,
    levels: OnceLock<Option<Vec<u32>>>,
}

impl PartialEq for Transducer {
    /// Equality of representation (same numbering), not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.states == other.states
            && self.initial == other.initial
            && self.alphabet_size == other.alphabet_size
    }
}

impl Eq for Transducer {}

impl fmt::Debug for Transducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_fbt(self))
    }
}

impl Transducer {
    pub(crate) fn from_raw(states: Vec<State>, initial: u32, alphabet_size: u32) -> Self {
        Transducer {
            states,
            initial,
            alphabet_size,
            levels: OnceLock::new(),
        }
    }

    /// The transducer representing the empty word: a single terminal state.
    pub fn identity(alphabet_size: usize) -> Self {
        Self::from_raw(vec![State::new(true)], 0, alphabet_size as u32)
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn initial(&self) -> StateId {
        StateId(self.initial)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size as usize
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len() as u32).map(StateId)
    }

    pub fn is_terminal(&self, q: StateId) -> bool {
        self.states[q.index()].terminal
    }

    pub fn edge(&self, q: StateId, bit: u8) -> Option<Edge> {
        self.states[q.index()].edge(bit)
    }

    /// `q♠b` for a single bit.
    pub fn next(&self, q: StateId, bit: u8) -> Option<StateId> {
        self.edge(q, bit).map(|e| e.target)
    }

    /// `q♣b` for a single bit.
    pub fn letter(&self, q: StateId, bit: u8) -> Option<Letter> {
        self.edge(q, bit).map(|e| e.out)
    }

    /// `q♠α`; `q♠ε = q`.
    pub fn step(&self, q: StateId, alpha: &Bits) -> Option<StateId> {
        alpha.iter().try_fold(q, |cur, &b| self.next(cur, b))
    }

    /// The letters emitted along `α` from `q`; `None` for `ε` or if the path leaves the domain.
    pub fn output(&self, q: StateId, alpha: &Bits) -> Option<Word> {
        if alpha.is_empty() {
            return None;
        }
        let mut cur = q;
        let mut out = Word::new();
        for &b in alpha {
            let e = self.edge(cur, b)?;
            out.push(e.out);
            cur = e.target;
        }
        Some(out)
    }

    /// The subtransducer rooted at `q`: same states, initial state `q`.
    pub fn view(&self, q: StateId) -> View<'_> {
        View { t: self, root: q }
    }

    /// An owned copy with initial state `q`.
    pub fn rerooted(&self, q: StateId) -> Transducer {
        Transducer::from_raw(self.states.clone(), q.0, self.alphabet_size)
    }

    /// Length of the longest path from each state to a state without transitions,
    /// or `None` if the transition graph has a cycle.
    fn compute_levels(&self) -> Option<Vec<u32>> {
        let order = self.postorder().ok()?;
        let mut levels = vec![0u32; self.states.len()];
        for q in order {
            let s = &self.states[q as usize];
            levels[q as usize] = s
                .next
                .iter()
                .filter(|&&n| n != NO_STATE)
                .map(|&n| levels[n as usize] + 1)
                .max()
                .unwrap_or(0);
        }
        Some(levels)
    }

    fn cached_levels(&self) -> Option<&[u32]> {
        self.levels.get_or_init(|| self.compute_levels()).as_deref()
    }

    /// The level of `q`; `None` when the transducer is cyclic.
    pub fn level(&self, q: StateId) -> Option<usize> {
        self.cached_levels().map(|l| l[q.index()] as usize)
    }

    /// All states ordered so that every state comes after its successors.
    /// Fails with a state on a cycle if there is one.
    fn postorder(&self) -> std::result::Result<Vec<u32>, u32> {
        const WHITE: u8 = 0;
        const GREY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.states.len();
        let mut colour = vec![WHITE; n];
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<(u32, usize)> = Vec::new();
        for root in 0..n as u32 {
            if colour[root as usize] != WHITE {
                continue;
            }
            colour[root as usize] = GREY;
            stack.push((root, 0));
            while let Some(&mut (q, ref mut i)) = stack.last_mut() {
                if *i < 2 {
                    let n = self.states[q as usize].next[*i];
                    *i += 1;
                    if n == NO_STATE {
                        continue;
                    }
                    match colour[n as usize] {
                        WHITE => {
                            colour[n as usize] = GREY;
                            stack.push((n, 0));
                        }
                        GREY => return Err(n),
                        _ => {}
                    }
                } else {
                    colour[q as usize] = BLACK;
                    order.push(q);
                    stack.pop();
                }
            }
        }
        Ok(order)
    }

    /// Marks the states reachable from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.states.len()];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial as usize] = true;
        while let Some(q) = queue.pop_front() {
            for &n in &self.states[q as usize].next {
                if n != NO_STATE && !seen[n as usize] {
                    seen[n as usize] = true;
                    queue.push_back(n);
                }
            }
        }
        seen
    }

    /// Marks the states from which some terminal state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let n = self.states.len();
        let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (q, s) in self.states.iter().enumerate() {
            for &t in &s.next {
                if t != NO_STATE {
                    preds[t as usize].push(q as u32);
                }
            }
        }
        let mut live = vec![false; n];
        let mut queue: VecDeque<u32> = VecDeque::new();
        for (q, s) in self.states.iter().enumerate() {
            if s.terminal {
                live[q] = true;
                queue.push_back(q as u32);
            }
        }
        while let Some(q) = queue.pop_front() {
            for &p in &preds[q as usize] {
                if !live[p as usize] {
                    live[p as usize] = true;
                    queue.push_back(p);
                }
            }
        }
        live
    }

    /// Every state lies on a path from the initial state to a terminal state.
    pub fn is_trim(&self) -> bool {
        let r = self.reachable();
        let c = self.coreachable();
        r.iter().zip(&c).all(|(&a, &b)| a && b)
    }

    /// Restricts to the useful states, renumbered breadth-first from the initial
    /// state with the 0-edge explored before the 1-edge.
    pub fn trim(&self) -> Result<Transducer> {
        let live = self.coreachable();
        if !live[self.initial as usize] {
            return Err(Error::NoTerminal);
        }
        let mut map = vec![NO_STATE; self.states.len()];
        let mut order = vec![self.initial];
        map[self.initial as usize] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for &n in &self.states[q as usize].next {
                if n != NO_STATE && live[n as usize] && map[n as usize] == NO_STATE {
                    map[n as usize] = order.len() as u32;
                    order.push(n);
                }
            }
        }
        let states = order
            .iter()
            .map(|&q| {
                let s = self.states[q as usize];
                let mut ns = State::new(s.terminal);
                for b in 0..2 {
                    let n = s.next[b];
                    if n != NO_STATE && live[n as usize] {
                        ns.next[b] = map[n as usize];
                        ns.out[b] = s.out[b];
                    }
                }
                ns
            })
            .collect();
        Ok(Transducer::from_raw(states, 0, self.alphabet_size))
    }

    /// Checks the structural invariants: ids in range, acyclicity, and on every
    /// reachable state either terminal with no transitions or non-terminal with
    /// both transitions leading to the same depth.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.states.len() as u32;
        if self.initial >= n {
            return Err(Violation::InitialOutOfRange(self.initial));
        }
        for (q, s) in self.states.iter().enumerate() {
            for b in 0..2u8 {
                let t = s.next[b as usize];
                if t == NO_STATE {
                    continue;
                }
                if t >= n {
                    return Err(Violation::TargetOutOfRange {
                        state: q as u32,
                        bit: b,
                        target: t,
                    });
                }
                if s.out[b as usize] >= self.alphabet_size {
                    return Err(Violation::LetterOutOfRange {
                        state: q as u32,
                        bit: b,
                        letter: s.out[b as usize],
                    });
                }
            }
        }
        self.postorder().map_err(Violation::Cycle)?;
        let levels = self.cached_levels().expect("acyclic");
        let reachable = self.reachable();
        for (q, s) in self.states.iter().enumerate() {
            if !reachable[q] {
                continue;
            }
            let q32 = q as u32;
            match (s.terminal, s.edge_count()) {
                (true, 0) => {}
                (true, _) => return Err(Violation::TerminalWithTransitions(q32)),
                (false, 2) => {
                    if levels[s.next[0] as usize] != levels[s.next[1] as usize] {
                        return Err(Violation::UnevenDepth(q32));
                    }
                }
                (false, _) => return Err(Violation::PartialTransitions(q32)),
            }
        }
        Ok(())
    }

    /// Shorthand for `self.view(self.initial()).realizes(w)`.
    pub fn realizes(&self, w: &Word) -> Result<bool> {
        self.view(self.initial()).realizes(w)
    }
}

/// A transducer seen from a chosen root state.
#[derive(Clone, Copy)]
pub struct View<'a> {
    t: &'a Transducer,
    root: StateId,
}

impl View<'_> {
    pub fn root(&self) -> StateId {
        self.root
    }

    /// Whether this view realizes `f_w`, checked on every input by direct
    /// comparison against the prefix/suffix calculus on `w`.
    pub fn realizes(&self, w: &Word) -> Result<bool> {
        let k = content(w).len();
        if k > REALIZE_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "content size {k} exceeds {REALIZE_BUDGET}"
            )));
        }
        if self.root.index() >= self.t.num_states() {
            return Ok(false);
        }
        let live = self.t.coreachable();
        Ok(self.check(self.root, w, &live))
    }

    fn check(&self, q: StateId, w: &[Letter], live: &[bool]) -> bool {
        let t = self.t;
        if w.is_empty() {
            // accepts exactly ε from here
            return t.is_terminal(q)
                && (0..2).all(|b| t.next(q, b).is_none_or(|n| !live[n.index()]));
        }
        if t.is_terminal(q) {
            return false;
        }
        (0..2u8).all(|b| {
            let Some(e) = t.edge(q, b) else {
                return false;
            };
            let (rest, a) = split(w, b);
            e.out == a && self.check(e.target, rest, live)
        })
    }
}

/// One `∘`/`∗` step on a non-empty word.
fn split(w: &[Letter], bit: u8) -> (&[Letter], Letter) {
    let alpha = [bit];
    let rest = crate::words::circ_slice(w, &alpha).expect("non-empty word");
    let a = if bit == 0 {
        w[rest.len()]
    } else {
        w[w.len() - rest.len() - 1]
    };
    (rest, a)
}

/// Incremental construction of a [`Transducer`].
#[derive(Clone, Debug, Default)]
pub struct TransducerBuilder {
    states: Vec<State>,
    alphabet_size: u32,
}

impl TransducerBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        TransducerBuilder {
            states: Vec::with_capacity(n),
            alphabet_size: 0,
        }
    }

    /// Ensures the alphabet has at least `n` letters.
    pub fn alphabet_size(&mut self, n: usize) -> &mut Self {
        self.alphabet_size = self.alphabet_size.max(n as u32);
        self
    }

    pub fn add_state(&mut self, terminal: bool) -> StateId {
        self.states.push(State::new(terminal));
        StateId(self.states.len() as u32 - 1)
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn set_terminal(&mut self, q: StateId, terminal: bool) -> &mut Self {
        self.states[q.index()].terminal = terminal;
        self
    }

    pub fn set_edge(&mut self, q: StateId, bit: u8, target: StateId, out: Letter) -> &mut Self {
        let s = &mut self.states[q.index()];
        s.next[bit as usize] = target.0;
        s.out[bit as usize] = out.0;
        self.alphabet_size = self.alphabet_size.max(out.0 + 1);
        self
    }

    pub fn clear_edge(&mut self, q: StateId, bit: u8) -> &mut Self {
        self.states[q.index()].next[bit as usize] = NO_STATE;
        self
    }

    /// Finishes construction. No invariants are checked; see [`Transducer::validate`].
    pub fn build(self, initial: StateId) -> Transducer {
        Transducer::from_raw(self.states, initial.0, self.alphabet_size)
    }
}

/// The complete binary tree transducer on `{0,1}^{≤k}`, `k = |cont(w)|`, whose
/// edge into state `α` emits `w∗α`. Exponential in `k`; a reference construction.
pub fn treelike(w: &Word) -> Transducer {
    let k = content(w).len();
    let mut b = TransducerBuilder::with_capacity((1usize << (k + 1)) - 1);
    b.alphabet_size(w.alphabet_size());
    // state for a path of length d with value x has id 2^d - 1 + x
    for d in 0..=k {
        for _ in 0..1usize << d {
            b.add_state(d == k);
        }
    }
    fn fill(b: &mut TransducerBuilder, w: &[Letter], d: usize, x: usize) {
        if w.is_empty() {
            return;
        }
        let id = StateId(((1usize << d) - 1 + x) as u32);
        for bit in 0..2u8 {
            let (rest, a) = split(w, bit);
            let child = 2 * x + bit as usize;
            let cid = StateId(((1usize << (d + 1)) - 1 + child) as u32);
            b.set_edge(id, bit, cid, a);
            fill(b, rest, d + 1, child);
        }
    }
    fill(&mut b, w, 0, 0);
    b.build(StateId(0))
}
