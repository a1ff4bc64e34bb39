//! Minimization of acyclic transducers, isomorphism of trim transducers, and
//! equality in the free band.
//!
//! In an acyclic transducer two states can only be equivalent if they have the
//! same level, so states are merged one level at a time, from the terminals
//! upward, by hashing their signatures.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::interval::interval_transducer;
use crate::transducer::{State, Transducer};
use crate::words::Word;

const NO_CLASS: u32 = u32::MAX;

/// The minimal transducer realizing the same function as `t`, numbered
/// breadth-first from the initial state (0-edge before 1-edge).
pub fn minimize(t: &Transducer) -> Result<Transducer> {
    t.validate()?;
    let t = t.trim()?;
    let n = t.num_states();
    let levels: Vec<usize> = t
        .state_ids()
        .map(|q| t.level(q).expect("acyclic"))
        .collect();
    let top = levels.iter().copied().max().unwrap_or(0);
    let mut by_level: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for (q, &l) in levels.iter().enumerate() {
        by_level[l].push(q as u32);
    }

    let mut class = vec![NO_CLASS; n];
    let mut reps: Vec<State> = Vec::new();
    let mut seen: HashMap<(bool, [u32; 2], [u32; 2]), u32> = HashMap::new();
    for states in &by_level {
        seen.clear();
        for &q in states {
            let s = t.states[q as usize];
            let mut next = [NO_CLASS; 2];
            let mut out = [0; 2];
            for b in 0..2 {
                if s.next[b] != u32::MAX {
                    next[b] = class[s.next[b] as usize];
                    out[b] = s.out[b];
                }
            }
            let id = *seen.entry((s.terminal, next, out)).or_insert_with(|| {
                reps.push(State {
                    terminal: s.terminal,
                    next: next.map(|c| if c == NO_CLASS { u32::MAX } else { c }),
                    out,
                });
                reps.len() as u32 - 1
            });
            class[q as usize] = id;
        }
    }
    let merged = Transducer::from_raw(reps, class[t.initial as usize], t.alphabet_size() as u32);
    merged.trim()
}

/// Whether `t` is valid, trim, and has no two equivalent states.
pub fn is_minimal(t: &Transducer) -> bool {
    t.validate().is_ok()
        && t.is_trim()
        && minimize(t).is_ok_and(|m| m.num_states() == t.num_states())
}

/// Whether two trim transducers differ only by the numbering of their states.
/// The declared alphabet sizes are not compared.
pub fn isomorphic(a: &Transducer, b: &Transducer) -> Result<bool> {
    if !a.is_trim() || !b.is_trim() {
        return Err(Error::NotTrim);
    }
    if a.num_states() != b.num_states() {
        return Ok(false);
    }
    let n = a.num_states();
    let mut fwd = vec![u32::MAX; n];
    let mut bwd = vec![u32::MAX; n];
    let mut stack = vec![(a.initial, b.initial)];
    fwd[a.initial as usize] = b.initial;
    bwd[b.initial as usize] = a.initial;
    while let Some((p, q)) = stack.pop() {
        let sp = a.states[p as usize];
        let sq = b.states[q as usize];
        if sp.terminal != sq.terminal {
            return Ok(false);
        }
        for bit in 0..2 {
            let (tp, tq) = (sp.next[bit], sq.next[bit]);
            if (tp == u32::MAX) != (tq == u32::MAX) {
                return Ok(false);
            }
            if tp == u32::MAX {
                continue;
            }
            if sp.out[bit] != sq.out[bit] {
                return Ok(false);
            }
            match (fwd[tp as usize], bwd[tq as usize]) {
                (u32::MAX, u32::MAX) => {
                    fwd[tp as usize] = tq;
                    bwd[tq as usize] = tp;
                    stack.push((tp, tq));
                }
                (x, y) if x == tq && y == tp => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// Whether two transducers realize the same function.
pub fn equal_transducers(a: &Transducer, b: &Transducer) -> Result<bool> {
    isomorphic(&minimize(a)?, &minimize(b)?)
}

/// Whether `u` and `v` are equal in the free band.
pub fn equal_in_free_band(u: &Word, v: &Word) -> bool {
    let tu = minimize(&interval_transducer(u)).expect("interval transducers are well formed");
    let tv = minimize(&interval_transducer(v)).expect("interval transducers are well formed");
    isomorphic(&tu, &tv).expect("minimal transducers are trim")
}
