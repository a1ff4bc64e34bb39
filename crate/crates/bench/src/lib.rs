//! Timing harness producing `.dat` series for the free band algorithms.
//!
//! Each suite samples uniform random words on a grid of alphabet sizes and word
//! lengths, times one routine per sample and writes one `x<TAB>seconds` row per
//! grid cell: the mean of the x-axis quantity and the mean time over the cell.

use std::fmt;
use std::hint::black_box;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use freeband::{
    equal_in_free_band, interval_transducer, isomorphic, min_word, minimize, multiply, Transducer,
    Word, WordSampler,
};

pub const FULL_ALPHABETS: [usize; 10] = [2, 7, 12, 17, 22, 27, 32, 37, 42, 47];
pub const FULL_LENGTHS: [usize; 10] = [20, 520, 1020, 1520, 2020, 2520, 3020, 3520, 4020, 4520];
pub const FULL_WORDS_PER_CELL: usize = 100;
pub const DEFAULT_SCALE: f64 = 0.1;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Interval,
    Minimize,
    Isomorphism,
    Equal,
    Multiply,
    MinWord,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Interval,
        Suite::Minimize,
        Suite::Isomorphism,
        Suite::Equal,
        Suite::Multiply,
        Suite::MinWord,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Interval => "interval",
            Suite::Minimize => "minimize",
            Suite::Isomorphism => "isomorphism",
            Suite::Equal => "equal",
            Suite::Multiply => "multiply",
            Suite::MinWord => "minword",
        }
    }

    /// What the x column measures.
    pub fn x_axis(self) -> &'static str {
        match self {
            Suite::Interval => "|A|*|w|",
            Suite::Minimize | Suite::Isomorphism => "states",
            Suite::Equal => "(|u|+|v|)*|A|",
            Suite::Multiply => "|T1|+|T2|+|A|^2",
            Suite::MinWord => "|T|*|A|",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite '{s}', expected one of {}", names.join(", "))
            })
    }
}

/// Alphabet sizes, word lengths and samples per (alphabet, length) cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub alphabets: Vec<usize>,
    pub lengths: Vec<usize>,
    pub words_per_cell: usize,
}

impl Grid {
    /// The full grid shrunk by `scale`: `max(1, round(100·scale))` words per
    /// cell and `max(2, ceil(10·√scale))` lengths spread evenly over the full
    /// range. Every alphabet size is kept. Scale 1 gives the full grid.
    pub fn scaled(scale: f64) -> Grid {
        let scale = scale.clamp(0.0, 1.0);
        let words_per_cell = ((FULL_WORDS_PER_CELL as f64 * scale).round() as usize).max(1);
        let n = FULL_LENGTHS.len();
        let count = ((10.0 * scale.sqrt()).ceil() as usize).clamp(2, n);
        let lengths = (0..count)
            .map(|i| FULL_LENGTHS[(i * (n - 1) + (count - 1) / 2) / (count - 1)])
            .collect();
        Grid {
            alphabets: FULL_ALPHABETS.to_vec(),
            lengths,
            words_per_cell,
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.alphabets
            .iter()
            .flat_map(move |&m| self.lengths.iter().map(move |&l| (m, l)))
    }

    pub fn samples(&self) -> usize {
        self.alphabets.len() * self.lengths.len() * self.words_per_cell
    }
}

/// One `.dat` row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Row {
    pub x: f64,
    pub seconds: f64,
}

/// Times `f` once.
pub fn time<T>(f: impl FnOnce() -> T) -> Duration {
    let start = Instant::now();
    black_box(f());
    start.elapsed()
}

fn minimal(w: &Word) -> Transducer {
    minimize(&interval_transducer(w)).expect("interval transducers are well formed")
}

/// Builds the inputs for one sample and times the suite's routine on them.
/// Returns the x-axis value and the elapsed time.
pub fn measure(suite: Suite, sampler: &mut WordSampler, m: usize, len: usize) -> (f64, Duration) {
    let w = sampler.word(m, len);
    match suite {
        Suite::Interval => ((m * len) as f64, time(|| interval_transducer(&w))),
        Suite::Minimize => {
            let t = interval_transducer(&w);
            (t.num_states() as f64, time(|| minimize(&t)))
        }
        Suite::Isomorphism => {
            // an equal word forces a full traversal
            let a = minimal(&w);
            let b = minimal(&w.concat(&w));
            (a.num_states() as f64, time(|| isomorphic(&a, &b)))
        }
        Suite::Equal => {
            let v = sampler.word(m, len);
            (
                ((w.len() + v.len()) * m) as f64,
                time(|| equal_in_free_band(&w, &v)),
            )
        }
        Suite::Multiply => {
            let v = sampler.word(m, len);
            let (tx, ty) = (minimal(&w), minimal(&v));
            (
                (tx.num_states() + ty.num_states() + m * m) as f64,
                time(|| multiply(&tx, &ty)),
            )
        }
        Suite::MinWord => {
            let t = minimal(&w);
            ((t.num_states() * m) as f64, time(|| min_word(&t)))
        }
    }
}

/// Runs a suite over `grid`, one row per cell, cells in alphabet-major order.
pub fn run_suite(suite: Suite, grid: &Grid, seed: u64) -> Vec<Row> {
    let mut sampler = WordSampler::new(seed);
    grid.cells()
        .map(|(m, len)| {
            let (mut xs, mut secs) = (0.0, 0.0);
            for _ in 0..grid.words_per_cell {
                let (x, d) = measure(suite, &mut sampler, m, len);
                xs += x;
                secs += d.as_secs_f64();
            }
            let n = grid.words_per_cell as f64;
            Row {
                x: xs / n,
                seconds: secs / n,
            }
        })
        .collect()
}

pub fn write_dat(rows: &[Row], mut out: impl Write) -> io::Result<()> {
    for r in rows {
        writeln!(out, "{}\t{:.9}", r.x, r.seconds)?;
    }
    Ok(())
}

/// Least-squares slope of seconds against x.
pub fn slope(rows: &[Row]) -> f64 {
    let n = rows.len() as f64;
    let mx = rows.iter().map(|r| r.x).sum::<f64>() / n;
    let my = rows.iter().map(|r| r.seconds).sum::<f64>() / n;
    let sxy: f64 = rows.iter().map(|r| (r.x - mx) * (r.seconds - my)).sum();
    let sxx: f64 = rows.iter().map(|r| (r.x - mx).powi(2)).sum();
    sxy / sxx
}
