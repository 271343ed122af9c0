use super::element::Element;
use super::presentation::Presentation;
use super::word::Word;
use crate::scalars::Scalar;
use std::sync::Arc;

/// Ordered words of the given degree, in printing order.
pub fn basis_words(p: &Presentation, degree: usize) -> Vec<Word> {
    let ng = p.gens().len() as u8;
    let mut out = Vec::new();
    let mut cur = Word::empty();
    fn rec(p: &Presentation, ng: u8, left: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for g in 0..ng {
            if let Some(&last) = cur.last() {
                if !p.alpha.basis_pair(last, g) {
                    continue;
                }
            }
            cur.0.push(g);
            rec(p, ng, left - 1, cur, out);
            cur.0.pop();
        }
    }
    rec(p, ng, degree, &mut cur, &mut out);
    out
}

/// Normal-form basis elements of the given degree.
pub fn basis_enumerate(p: &Arc<Presentation>, degree: usize) -> Vec<Element> {
    basis_words(p, degree)
        .into_iter()
        .map(|w| Element::from_terms(Some(p.clone()), [(w, Scalar::one())]))
        .collect()
}

/// Whether `e` commutes with every generator.
pub fn is_central(p: &Arc<Presentation>, e: &Element) -> bool {
    (0..p.gens().len() as u8).all(|g| e.commutator(&Element::gen(p, g)).is_zero())
}

type Row = std::collections::BTreeMap<Word, Scalar>;

fn reduce_into(pivots: &mut std::collections::BTreeMap<Word, Row>, mut row: Row) -> bool {
    loop {
        let (lead, c) = match row.iter().next_back() {
            Some((w, c)) => (w.clone(), c.clone()),
            None => return false,
        };
        match pivots.get(&lead) {
            Some(p) => {
                for (w, pc) in p {
                    let v = row.get(w).cloned().unwrap_or_else(Scalar::zero).sub(&c.mul(pc));
                    if v.is_zero() {
                        row.remove(w);
                    } else {
                        row.insert(w.clone(), v);
                    }
                }
            }
            None => {
                let inv = c.inv().expect("nonzero pivot");
                let row = row.into_iter().map(|(w, v)| (w, v.mul(&inv))).collect();
                pivots.insert(lead, row);
                return true;
            }
        }
    }
}

/// Rank of the span of the given elements over the scalar field.
pub fn rank(elems: &[Element]) -> usize {
    let mut pivots = std::collections::BTreeMap::new();
    elems.iter().filter(|e| reduce_into(&mut pivots, e.normal_form().terms().map(|(w, c)| (w.clone(), c.clone())).collect())).count()
}

/// Linear independence, tried first at a rational specialization of `q`
/// (full rank there implies full rank generically) and exactly otherwise.
pub fn linearly_independent(elems: &[Element]) -> bool {
    let x = crate::scalars::Rat::from_frac(7, 3);
    let special: Option<Vec<Row>> = elems
        .iter()
        .map(|e| e.normal_form().terms().map(|(w, c)| c.substitute(0, &x).ok().map(|v| (w.clone(), v))).collect::<Option<Row>>())
        .collect();
    if let Some(rows) = special {
        let mut pivots = std::collections::BTreeMap::new();
        let r = rows.into_iter().filter(|row| reduce_into(&mut pivots, row.iter().filter(|(_, v)| !v.is_zero()).map(|(w, v)| (w.clone(), v.clone())).collect())).count();
        if r == elems.len() {
            return true;
        }
    }
    rank(elems) == elems.len()
}
