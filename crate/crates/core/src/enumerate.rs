//! Counting the elements of a finitely generated free band.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::minword::normalize;
use crate::words::{Letter, Word};

/// The number of elements of the free band on `alphabet_size` generators,
/// found by closing the generators under right multiplication by a generator.
/// Fails once more than `budget` elements have been found.
pub fn enumerate_fb(alphabet_size: usize, budget: usize) -> Result<usize> {
    let gens: Vec<Letter> = (0..alphabet_size as u32).map(Letter).collect();
    let mut seen: HashSet<Word> = HashSet::new();
    let mut frontier: Vec<Word> = Vec::new();
    for &g in &gens {
        let w = Word::from_letters(vec![g]);
        seen.insert(w.clone());
        frontier.push(w);
    }
    while let Some(u) = frontier.pop() {
        for &g in &gens {
            let mut v = u.clone();
            v.push(g);
            let v = normalize(&v);
            if !seen.contains(&v) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded(format!(
                        "more than {budget} elements on {alphabet_size} generators"
                    )));
                }
                seen.insert(v.clone());
                frontier.push(v);
            }
        }
    }
    Ok(seen.len())
}
