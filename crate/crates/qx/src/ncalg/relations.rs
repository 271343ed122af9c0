//! Defining relation tables.

use super::gens::{Alphabet, Case, Family, PresKind};
use super::solve::Row;
use super::word::Word;
use crate::scalars::{qdiff, Scalar};

/// Raw factor `(family, i, j)`, canonicalized when the relation is built.
pub type Raw = (Family, usize, usize);

pub(crate) struct RelBuilder<'a> {
    alpha: &'a Alphabet,
    row: Row,
}

impl<'a> RelBuilder<'a> {
    pub fn new(alpha: &'a Alphabet) -> Self {
        RelBuilder { alpha, row: Row::new() }
    }

    pub fn term(mut self, c: Scalar, f: &[Raw]) -> Self {
        let mut coef = c;
        let mut w = Word::empty();
        for &(fam, i, j) in f {
            match self.alpha.canon(fam, i, j).expect("index in range") {
                Some((s, g)) => {
                    coef = coef.mul(&s);
                    w = w.pushed(g);
                }
                None => return self,
            }
        }
        let nv = self.row.get(&w).cloned().unwrap_or_else(Scalar::zero).add(&coef);
        if nv.is_zero() {
            self.row.remove(&w);
        } else {
            self.row.insert(w, nv);
        }
        self
    }

    pub fn done(self) -> Row {
        self.row
    }
}

fn push(out: &mut Vec<Row>, r: Row) {
    if !r.is_empty() {
        out.push(r);
    }
}

fn int(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// `q^{-1}(q^2 - q^{-2})`.
fn kappa() -> Scalar {
    Scalar::qpow(-1).mul(&Scalar::qpow(2).sub(&Scalar::qpow(-2)))
}

pub(crate) fn mat_relations(alpha: &Alphabet, fam: Family, out: &mut Vec<Row>) {
    let n = alpha.n;
    let q = Scalar::q();
    let t = |i, j| (fam, i, j);
    for i in 1..=n {
        for k in 1..=n {
            for l in k + 1..=n {
                push(out, RelBuilder::new(alpha).term(int(1), &[t(i, k), t(i, l)]).term(q.neg(), &[t(i, l), t(i, k)]).done());
                push(out, RelBuilder::new(alpha).term(int(1), &[t(k, i), t(l, i)]).term(q.neg(), &[t(l, i), t(k, i)]).done());
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                for l in k + 1..=n {
                    push(out, RelBuilder::new(alpha).term(int(1), &[t(i, l), t(j, k)]).term(int(-1), &[t(j, k), t(i, l)]).done());
                    push(
                        out,
                        RelBuilder::new(alpha)
                            .term(int(1), &[t(i, k), t(j, l)])
                            .term(int(-1), &[t(j, l), t(i, k)])
                            .term(qdiff().neg(), &[t(i, l), t(j, k)])
                            .done(),
                    );
                }
            }
        }
    }
}

fn x(i: usize, j: usize) -> Raw {
    (Family::X, i, j)
}

pub(crate) fn orthogonal_relations(alpha: &Alphabet, out: &mut Vec<Row>) {
    let n = alpha.n;
    let q = Scalar::q();
    let b = || RelBuilder::new(alpha);
    for i in 1..=n {
        for j in i + 1..=n {
            push(out, b().term(int(1), &[x(i, j), x(j, j)]).term(Scalar::qpow(2).neg(), &[x(j, j), x(i, j)]).done());
            push(out, b().term(int(1), &[x(i, i), x(i, j)]).term(Scalar::qpow(2).neg(), &[x(i, j), x(i, i)]).done());
            push(
                out,
                b().term(int(1), &[x(i, i), x(j, j)])
                    .term(int(-1), &[x(j, j), x(i, i)])
                    .term(kappa().neg(), &[x(i, j), x(i, j)])
                    .done(),
            );
            for k in j + 1..=n {
                push(out, b().term(int(1), &[x(i, k), x(j, k)]).term(q.neg(), &[x(j, k), x(i, k)]).done());
                push(out, b().term(int(1), &[x(i, j), x(i, k)]).term(q.neg(), &[x(i, k), x(i, j)]).done());
                push(
                    out,
                    b().term(int(1), &[x(i, i), x(j, k)])
                        .term(int(-1), &[x(j, k), x(i, i)])
                        .term(kappa().neg(), &[x(i, j), x(i, k)])
                        .done(),
                );
                push(
                    out,
                    b().term(int(1), &[x(i, j), x(k, k)])
                        .term(int(-1), &[x(k, k), x(i, j)])
                        .term(kappa().neg(), &[x(i, k), x(j, k)])
                        .done(),
                );
                push(
                    out,
                    b().term(int(1), &[x(i, j), x(j, k)])
                        .term(q.neg(), &[x(j, k), x(i, j)])
                        .term(q.mul(&qdiff()).neg(), &[x(j, j), x(i, k)])
                        .done(),
                );
                push(out, b().term(int(1), &[x(i, k), x(j, j)]).term(int(-1), &[x(j, j), x(i, k)]).done());
                for l in k + 1..=n {
                    push(out, b().term(int(1), &[x(i, l), x(j, k)]).term(int(-1), &[x(j, k), x(i, l)]).done());
                    push(
                        out,
                        b().term(int(1), &[x(i, k), x(j, l)])
                            .term(int(-1), &[x(j, l), x(i, k)])
                            .term(qdiff().neg(), &[x(i, l), x(j, k)])
                            .done(),
                    );
                    push(
                        out,
                        b().term(int(1), &[x(i, j), x(k, l)])
                            .term(int(-1), &[x(k, l), x(i, j)])
                            .term(qdiff().neg(), &[x(i, k), x(j, l)])
                            .term(qdiff().mul(&Scalar::qpow(-1)).neg(), &[x(i, l), x(j, k)])
                            .done(),
                    );
                }
            }
        }
    }
}

pub(crate) fn symplectic_relations(alpha: &Alphabet, out: &mut Vec<Row>) {
    let n = alpha.n;
    let q = Scalar::q();
    let b = || RelBuilder::new(alpha);
    for i in 1..=n {
        for k in 1..=n {
            for l in k + 1..=n {
                push(out, b().term(int(1), &[x(i, k), x(i, l)]).term(q.neg(), &[x(i, l), x(i, k)]).done());
                push(out, b().term(int(1), &[x(k, i), x(l, i)]).term(q.neg(), &[x(l, i), x(k, i)]).done());
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    push(out, b().term(int(1), &[x(i, l), x(j, k)]).term(int(-1), &[x(j, k), x(i, l)]).done());
                    push(
                        out,
                        b().term(int(1), &[x(i, k), x(j, l)])
                            .term(int(-1), &[x(j, l), x(i, k)])
                            .term(qdiff().neg(), &[x(i, l), x(j, k)])
                            .done(),
                    );
                    push(
                        out,
                        b().term(int(1), &[x(i, j), x(k, l)])
                            .term(int(-1), &[x(k, l), x(i, j)])
                            .term(qdiff().neg(), &[x(i, k), x(j, l)])
                            .term(qdiff().mul(&q), &[x(i, l), x(j, k)])
                            .done(),
                    );
                }
            }
        }
    }
}

/// The alternative written forms of the four-index relations, kept as checks.
pub fn rewritten_forms(alpha: &Alphabet) -> Vec<Row> {
    let n = alpha.n;
    let q = Scalar::q();
    let mut out = Vec::new();
    let case = alpha.case().expect("x presentation");
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let r = match case {
                        Case::O => RelBuilder::new(alpha)
                            .term(int(1), &[x(i, j), x(k, l)])
                            .term(int(-1), &[x(k, l), x(i, j)])
                            .term(q.neg(), &[x(i, k), x(j, l)])
                            .term(Scalar::qpow(-1), &[x(j, l), x(i, k)]),
                        Case::Sp => RelBuilder::new(alpha)
                            .term(int(1), &[x(i, j), x(k, l)])
                            .term(int(-1), &[x(k, l), x(i, j)])
                            .term(q.neg(), &[x(j, l), x(i, k)])
                            .term(Scalar::qpow(-1), &[x(i, k), x(j, l)]),
                    };
                    push(&mut out, r.done());
                }
            }
        }
    }
    out
}

fn delta(b: bool) -> i32 {
    b as i32
}

/// Entrywise expansion of the reflection equation, one relation per `(i, j, k, l)`.
pub fn reflection_expansion(alpha: &Alphabet) -> Vec<Row> {
    let n = alpha.n;
    let d = qdiff();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let qp = |e: i32| Scalar::qpow(e);
                    let mut r = RelBuilder::new(alpha)
                        .term(qp(delta(j == k) + delta(i == j)), &[x(i, k), x(j, l)])
                        .term(qp(delta(k == l) + delta(i == l)).neg(), &[x(j, l), x(i, k)]);
                    if i < l {
                        r = r.term(d.mul(&qp(delta(k == l))).neg(), &[x(j, i), x(l, k)]);
                    }
                    if j < k {
                        r = r.term(d.mul(&qp(delta(i == j))), &[x(i, j), x(k, l)]);
                    }
                    let c3 = delta(k < l) - delta(j < i);
                    if c3 != 0 {
                        r = r.term(d.mul(&qp(delta(i == k))).mul(&int(c3 as i64)).neg(), &[x(j, k), x(i, l)]);
                    }
                    let c4 = delta(i < k && k < l) - delta(j < i && i < k);
                    if c4 != 0 {
                        r = r.term(d.mul(&d).mul(&int(c4 as i64)).neg(), &[x(j, i), x(k, l)]);
                    }
                    push(&mut out, r.done());
                }
            }
        }
    }
    out
}

pub(crate) fn ext_relations(alpha: &Alphabet, out: &mut Vec<Row>) {
    let n = alpha.n;
    let y = |i| (Family::Y, i, 0);
    for i in 1..=n {
        push(out, RelBuilder::new(alpha).term(int(1), &[y(i), y(i)]).done());
        for j in i + 1..=n {
            push(out, RelBuilder::new(alpha).term(Scalar::q(), &[y(i), y(j)]).term(int(1), &[y(j), y(i)]).done());
        }
    }
}

/// Commutation of every generator of `fa` with every generator of `fb`.
pub(crate) fn cross_commute(alpha: &Alphabet, fa: Family, fb: Family, out: &mut Vec<Row>) {
    let ga: Vec<_> = alpha.gens.iter().filter(|g| g.fam == fa).cloned().collect();
    let gb: Vec<_> = alpha.gens.iter().filter(|g| g.fam == fb).cloned().collect();
    for a in &ga {
        for b in &gb {
            let ra = (a.fam, a.i as usize, a.j as usize);
            let rb = (b.fam, b.i as usize, b.j as usize);
            push(out, RelBuilder::new(alpha).term(int(1), &[ra, rb]).term(int(-1), &[rb, ra]).done());
        }
    }
}

/// The defining relations used to derive the rewrite rules.
pub fn defining_relations(alpha: &Alphabet) -> Vec<Row> {
    let mut out = Vec::new();
    match alpha.kind {
        PresKind::Mat => mat_relations(alpha, Family::T, &mut out),
        PresKind::X(Case::O) => orthogonal_relations(alpha, &mut out),
        PresKind::X(Case::Sp) => symplectic_relations(alpha, &mut out),
        PresKind::Ext => ext_relations(alpha, &mut out),
        PresKind::MatSquare => {
            mat_relations(alpha, Family::U, &mut out);
            mat_relations(alpha, Family::V, &mut out);
            cross_commute(alpha, Family::U, Family::V, &mut out);
        }
        PresKind::XExt(c) => {
            match c {
                Case::O => orthogonal_relations(alpha, &mut out),
                Case::Sp => symplectic_relations(alpha, &mut out),
            }
            ext_relations(alpha, &mut out);
            cross_commute(alpha, Family::X, Family::Y, &mut out);
        }
    }
    out
}
