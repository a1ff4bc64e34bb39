//! Short-lex least representatives read off a minimal transducer.
//!
//! For an element `y` with `s = min(y∘0)(y∗0)` and `t = (y∗1)min(y∘1)`, the
//! least word `min(y)` is `s` and `t` glued along their longest overlap, and that
//! overlap is either the single shared letter, a word found `k` steps down the
//! transducer, or empty. The transducer is traversed depth-first while the word
//! is built in one buffer; each state remembers the span of the buffer spelling
//! its own least word so shared subtransducers are copied rather than revisited.

use crate::error::{Error, Result};
use crate::interval::interval_transducer;
use crate::minimize::{is_minimal, minimize};
use crate::transducer::{StateId, Transducer};
use crate::words::{Letter, Word};

/// How `min(y∘0)(y∗0)` and `(y∗1)min(y∘1)` overlap for the element `y` of a state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OverlapCase {
    /// `y∗0 = y∗1` and the overlap is that letter.
    SharedLetter,
    /// The overlap is `(y∗1)min(y∘01^k)(y∗0)`.
    Overlap,
    /// No non-empty overlap.
    Disjoint,
}

/// The case for a state, with `k` for [`OverlapCase::Overlap`] and the state's
/// level otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub case: OverlapCase,
    pub k: usize,
}

/// Decides the overlap case of a non-terminal state of a minimal transducer in
/// `O(level(q))` steps.
pub fn classify_case(t: &Transducer, q: StateId) -> Result<Classification> {
    if t.is_terminal(q) {
        return Err(Error::TerminalState(q.0));
    }
    let level = t.level(q).ok_or(Error::NotMinimal)?;
    let edge = |s: StateId, b: u8| t.edge(s, b).ok_or(Error::NotMinimal);
    let (e0, e1) = (edge(q, 0)?, edge(q, 1)?);
    if e0.out == e1.out {
        return Ok(Classification {
            case: OverlapCase::SharedLetter,
            k: level,
        });
    }
    let (mut u, mut v) = (e0.target, e1.target);
    for k in 1..=level {
        if t.is_terminal(u) || t.is_terminal(v) {
            break;
        }
        let (u1, v0) = (edge(u, 1)?, edge(v, 0)?);
        if u1.out == e1.out && v0.out == e0.out && u1.target == v0.target {
            return Ok(Classification {
                case: OverlapCase::Overlap,
                k,
            });
        }
        u = u1.target;
        v = v0.target;
    }
    Ok(Classification {
        case: OverlapCase::Disjoint,
        k: level,
    })
}

struct Builder<'a> {
    t: &'a Transducer,
    word: Vec<Letter>,
    // half-open span of `word` spelling the least word of each visited state
    memo: Vec<Option<(usize, usize)>>,
}

impl Builder<'_> {
    /// Appends `min(q)` to the buffer, assuming its first `l` letters are
    /// already the last `l` letters of the buffer.
    fn visit(&mut self, q: StateId, l: usize) {
        let start = self.word.len() - l;
        if let Some((i, j)) = self.memo[q.index()] {
            self.word.extend_from_within(i + l..j);
            return;
        }
        let t = self.t;
        let e0 = t.edge(q, 0).expect("minimal transducer");
        let e1 = t.edge(q, 1).expect("minimal transducer");
        self.visit(e0.target, l);
        let class = classify_case(t, q).expect("non-terminal state");
        let next_l = match class.case {
            OverlapCase::SharedLetter => {
                self.word.push(e0.out);
                0
            }
            OverlapCase::Overlap => {
                let mut alpha = vec![0u8];
                alpha.resize(class.k + 1, 1);
                let r = t.step(q, &alpha).expect("path exists");
                let (i, j) = self.memo[r.index()].expect("reachable from the 0-child");
                j - i
            }
            OverlapCase::Disjoint => {
                self.word.push(e0.out);
                self.word.push(e1.out);
                0
            }
        };
        self.visit(e1.target, next_l);
        self.memo[q.index()] = Some((start, self.word.len()));
    }
}

/// The short-lex least word of the element represented by a minimal transducer.
pub fn min_word(t: &Transducer) -> Result<Word> {
    t.validate()?;
    if !is_minimal(t) {
        return Err(Error::NotMinimal);
    }
    let mut b = Builder {
        t,
        word: Vec::new(),
        memo: t
            .state_ids()
            .map(|q| t.is_terminal(q).then_some((0, 0)))
            .collect(),
    };
    b.visit(t.initial(), 0);
    Ok(Word::from_letters(b.word))
}

/// The short-lex least word equal to `w` in the free band.
pub fn normalize(w: &Word) -> Word {
    let t = minimize(&interval_transducer(w)).expect("interval transducers are well formed");
    min_word(&t).expect("minimize output is minimal")
}
