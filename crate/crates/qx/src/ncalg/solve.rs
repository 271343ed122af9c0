use super::gens::Alphabet;
use super::word::Word;
use crate::scalars::Scalar;
use std::collections::BTreeMap;

pub type Row = BTreeMap<Word, Scalar>;

/// Failure to turn a relation list into rewrite rules.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveError {
    /// No relation determines the rewrite of this pair.
    Missing(u8, u8),
    /// A relation survives among normal-form words only.
    Inconsistent(Vec<(Word, Scalar)>),
}

/// Rewrite rules: every non-normal pair `a b` maps to a combination of
/// normal words.
pub type Rules = BTreeMap<(u8, u8), Vec<(Word, Scalar)>>;

fn is_basis_word(alpha: &Alphabet, w: &Word) -> bool {
    w.windows(2).all(|p| alpha.basis_pair(p[0], p[1]))
}

fn axpy(row: &mut Row, c: &Scalar, other: &Row) {
    for (w, v) in other {
        let nv = row.get(w).cloned().unwrap_or_else(Scalar::zero).add(&c.mul(v));
        if nv.is_zero() {
            row.remove(w);
        } else {
            row.insert(w.clone(), nv);
        }
    }
}

/// Row reduces `relations` with the non-normal words as pivots.
///
/// Returns the rules together with any residual relations among normal words.
pub fn solve_rules(alpha: &Alphabet, relations: &[Row]) -> (Rules, Vec<Row>) {
    let mut pivots: BTreeMap<Word, Row> = BTreeMap::new();
    let mut residual = Vec::new();
    for rel in relations {
        let mut row = rel.clone();
        loop {
            let hit = row.keys().find(|w| pivots.contains_key(*w)).cloned();
            match hit {
                Some(w) => {
                    let c = row[&w].neg();
                    let p = pivots[&w].clone();
                    axpy(&mut row, &c, &p);
                }
                None => break,
            }
        }
        if row.is_empty() {
            continue;
        }
        let piv = row.keys().rev().find(|w| !is_basis_word(alpha, w)).cloned();
        let piv = match piv {
            Some(p) => p,
            None => {
                residual.push(row);
                continue;
            }
        };
        let inv = row[&piv].inv().expect("nonzero pivot");
        for v in row.values_mut() {
            *v = v.mul(&inv);
        }
        for other in pivots.values_mut() {
            if let Some(c) = other.get(&piv).cloned() {
                axpy(other, &c.neg(), &row);
            }
        }
        pivots.insert(piv, row);
    }
    let mut rules = Rules::new();
    for (w, row) in pivots {
        if w.len() == 2 {
            let rhs = row
                .iter()
                .filter(|(k, _)| **k != w)
                .map(|(k, v)| (k.clone(), v.neg()))
                .collect();
            rules.insert((w[0], w[1]), rhs);
        }
    }
    (rules, residual)
}

/// Checks that every non-normal pair has a rule whose right side is normal.
pub fn check_complete(alpha: &Alphabet, rules: &Rules, residual: &[Row]) -> Result<(), SolveError> {
    if let Some(r) = residual.first() {
        return Err(SolveError::Inconsistent(r.iter().map(|(w, c)| (w.clone(), c.clone())).collect()));
    }
    let n = alpha.len() as u8;
    for a in 0..n {
        for b in 0..n {
            if alpha.basis_pair(a, b) {
                continue;
            }
            match rules.get(&(a, b)) {
                Some(rhs) if rhs.iter().all(|(w, _)| is_basis_word(alpha, w)) => {}
                _ => return Err(SolveError::Missing(a, b)),
            }
        }
    }
    Ok(())
}
