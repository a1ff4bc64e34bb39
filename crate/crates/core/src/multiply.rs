//! Products of free band elements given by transducers.
//!
//! For `x` and `y` with contents of sizes `cx` and `cy`, the product transducer
//! keeps both operands and adds a grid of states `(i, j)`, `0 ≤ i < cx`,
//! `0 ≤ j < cy`, standing for `(x∘1^i)·(y∘0^j)`. Grid cells on the far edges are
//! the operands' own spine states: `(cx, j)` is `y`'s state after `0^j` and
//! `(i, cy)` is `x`'s state after `1^i`.

use crate::error::Result;
use crate::transducer::{StateId, Transducer, TransducerBuilder};
use crate::words::Letter;

/// The 1-spine of `x` and the 0-spine of `y`, with the letters emitted along them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMaps {
    /// `x_spine[i]` is the state reached from `x`'s initial state by `1^i`.
    pub x_spine: Vec<StateId>,
    /// `y_spine[j]` is the state reached from `y`'s initial state by `0^j`.
    pub y_spine: Vec<StateId>,
    /// `x_letters[i - 1]` is the letter emitted by the `i`-th step of the 1-spine.
    pub x_letters: Vec<Letter>,
    /// `y_letters[j - 1]` is the letter emitted by the `j`-th step of the 0-spine.
    pub y_letters: Vec<Letter>,
}

fn spine(t: &Transducer, bit: u8) -> (Vec<StateId>, Vec<Letter>) {
    let mut q = t.initial();
    let mut states = vec![q];
    let mut letters = Vec::new();
    while let Some(e) = t.edge(q, bit) {
        letters.push(e.out);
        q = e.target;
        states.push(q);
    }
    (states, letters)
}

impl BoundaryMaps {
    pub fn new(tx: &Transducer, ty: &Transducer) -> Self {
        let (x_spine, x_letters) = spine(tx, 1);
        let (y_spine, y_letters) = spine(ty, 0);
        BoundaryMaps {
            x_spine,
            y_spine,
            x_letters,
            y_letters,
        }
    }

    pub fn cx(&self) -> usize {
        self.x_letters.len()
    }

    pub fn cy(&self) -> usize {
        self.y_letters.len()
    }

    fn alphabet_bound(&self) -> usize {
        self.x_letters
            .iter()
            .chain(&self.y_letters)
            .map(|a| a.index() + 1)
            .max()
            .unwrap_or(0)
    }
}

/// Values of `K_side(x∘1^i, y∘0^j)` for `0 ≤ i ≤ cx`, `0 ≤ j ≤ cy`.
#[derive(Clone, PartialEq, Eq)]
pub struct KTable {
    pub side: u8,
    rows: usize,
    cols: usize,
    values: Vec<u32>,
}

impl KTable {
    fn new(side: u8, rows: usize, cols: usize) -> Self {
        KTable {
            side,
            rows,
            cols,
            values: vec![0; rows * cols],
        }
    }

    /// Number of `i` values, `cx + 1`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of `j` values, `cy + 1`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        match self.values[i * self.cols + j] {
            0 => None,
            k => Some(k as usize),
        }
    }

    fn set(&mut self, i: usize, j: usize, k: u32) {
        self.values[i * self.cols + j] = k;
    }
}

impl std::fmt::Debug for KTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "K{} ({}x{})", self.side, self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                match self.get(i, j) {
                    Some(k) => write!(f, "{k:>3}")?,
                    None => write!(f, "  -")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Fills the K table for `side` in `O(cx·cy)` time from the spines.
pub fn k_table(maps: &BoundaryMaps, side: u8) -> KTable {
    let (cx, cy) = (maps.cx(), maps.cy());
    let mut table = KTable::new(side, cx + 1, cy + 1);
    let mut seen = vec![false; maps.alphabet_bound()];
    if side == 0 {
        // seen holds cont(x∘1^i)
        for i in (0..=cx).rev() {
            if i < cx {
                seen[maps.x_letters[i].index()] = true;
            }
            for j in (0..cy).rev() {
                let a = maps.y_letters[j];
                if !seen[a.index()] {
                    table.set(i, j, 1);
                } else if let Some(k) = table.get(i, j + 1) {
                    table.set(i, j, k as u32 + 1);
                }
            }
        }
    } else {
        // seen holds cont(y∘0^j)
        for j in (0..=cy).rev() {
            if j < cy {
                seen[maps.y_letters[j].index()] = true;
            }
            for i in (0..cx).rev() {
                let a = maps.x_letters[i];
                if !seen[a.index()] {
                    table.set(i, j, 1);
                } else if let Some(k) = table.get(i + 1, j) {
                    table.set(i, j, k as u32 + 1);
                }
            }
        }
    }
    table
}

/// The K table of side `side` (0 or 1) for the elements represented by `tx` and `ty`.
pub fn compute_k(tx: &Transducer, ty: &Transducer, side: u8) -> Result<KTable> {
    tx.validate()?;
    ty.validate()?;
    Ok(k_table(&BoundaryMaps::new(tx, ty), side))
}

/// A transducer representing the product of the elements represented by `tx`
/// and `ty`. The operands' states keep their ids, `ty`'s shifted by
/// `tx.num_states()`; grid states follow. The result is not minimized.
pub fn multiply(tx: &Transducer, ty: &Transducer) -> Result<Transducer> {
    tx.validate()?;
    ty.validate()?;
    if tx.is_terminal(tx.initial()) {
        return Ok(ty.clone());
    }
    if ty.is_terminal(ty.initial()) {
        return Ok(tx.clone());
    }
    let maps = BoundaryMaps::new(tx, ty);
    let k0 = k_table(&maps, 0);
    let k1 = k_table(&maps, 1);
    let (cx, cy) = (maps.cx(), maps.cy());
    let (nx, ny) = (tx.num_states(), ty.num_states());

    let mut b = TransducerBuilder::with_capacity(nx + ny + cx * cy);
    b.alphabet_size(tx.alphabet_size().max(ty.alphabet_size()));
    for (t, offset) in [(tx, 0u32), (ty, nx as u32)] {
        for q in t.state_ids() {
            b.add_state(t.is_terminal(q));
        }
        for q in t.state_ids() {
            for bit in 0..2 {
                if let Some(e) = t.edge(q, bit) {
                    b.set_edge(
                        StateId(q.0 + offset),
                        bit,
                        StateId(e.target.0 + offset),
                        e.out,
                    );
                }
            }
        }
    }
    let x_spine = |i: usize| maps.x_spine[i];
    let y_spine = |j: usize| StateId(maps.y_spine[j].0 + nx as u32);
    let base = (nx + ny) as u32;
    let grid = |i: usize, j: usize| {
        if i == cx {
            y_spine(j)
        } else if j == cy {
            x_spine(i)
        } else {
            StateId(base + (i * cy + j) as u32)
        }
    };
    for _ in 0..cx * cy {
        b.add_state(false);
    }
    for i in 0..cx {
        for j in 0..cy {
            let q = grid(i, j);
            match k0.get(i, j) {
                Some(k) => b.set_edge(q, 0, grid(i, j + k), maps.y_letters[j + k - 1]),
                None => {
                    let e = tx.edge(x_spine(i), 0).expect("spine state is not terminal");
                    b.set_edge(q, 0, e.target, e.out)
                }
            };
            match k1.get(i, j) {
                Some(k) => b.set_edge(q, 1, grid(i + k, j), maps.x_letters[i + k - 1]),
                None => {
                    let e = ty
                        .edge(maps.y_spine[j], 1)
                        .expect("spine state is not terminal");
                    b.set_edge(q, 1, StateId(e.target.0 + nx as u32), e.out)
                }
            };
        }
    }
    Ok(b.build(grid(0, 0)))
}
