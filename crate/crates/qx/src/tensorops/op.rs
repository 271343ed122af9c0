use crate::ncalg::Ring;
use crate::scalars::Scalar;
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::sync::Arc;

/// 0-based multi-index into `(C^N)^{⊗m}`.
pub type Idx = SmallVec<[u8; 8]>;

pub fn idx(v: &[usize]) -> Idx {
    v.iter().map(|&x| x as u8).collect()
}

/// All multi-indices of length `m` over `0..n`, lexicographic.
pub fn all_indices(n: usize, m: usize) -> Vec<Idx> {
    let mut out = vec![Idx::new()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(out.len() * n);
        for v in &out {
            for a in 0..n {
                let mut w = v.clone();
                w.push(a as u8);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Sparse vector in `(C^N)^{⊗m}` with coefficients in `C`.
#[derive(Clone, Debug)]
pub struct Vector<C> {
    pub n: usize,
    pub m: usize,
    pub data: BTreeMap<Idx, C>,
}

impl<C: Ring> Vector<C> {
    pub fn zero(n: usize, m: usize) -> Self {
        Vector { n, m, data: BTreeMap::new() }
    }

    pub fn basis(n: usize, at: &Idx) -> Self {
        let mut v = Vector::zero(n, at.len());
        v.data.insert(at.clone(), C::one());
        v
    }

    pub fn add_at(&mut self, i: Idx, c: C) {
        if c.vanishes() {
            return;
        }
        match self.data.get_mut(&i) {
            Some(e) => {
                *e = e.add(&c);
                if e.vanishes() {
                    self.data.remove(&i);
                }
            }
            None => {
                self.data.insert(i, c);
            }
        }
    }

    pub fn coeff(&self, i: &Idx) -> C {
        self.data.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Vector { n: self.n, m: self.m, data: self.data.iter().map(|(k, v)| (k.clone(), v.scale(s))).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, v) in &o.data {
            r.add_at(k.clone(), v.clone());
        }
        r
    }

    /// Drops coefficients that vanish.
    pub fn pruned(mut self) -> Self {
        self.data.retain(|_, v| !v.is_zero());
        self
    }
}

/// Sparse operator on `(C^N)^{⊗m}`, stored by columns.
#[derive(Clone, Debug)]
pub struct TensorOp<C> {
    pub n: usize,
    pub m: usize,
    pub cols: BTreeMap<Idx, Vec<(Idx, C)>>,
}

impl<C: Ring> TensorOp<C> {
    pub fn zero(n: usize, m: usize) -> Self {
        TensorOp { n, m, cols: BTreeMap::new() }
    }

    pub fn identity(n: usize, m: usize) -> Self {
        let mut op = TensorOp::zero(n, m);
        for i in all_indices(n, m) {
            op.cols.insert(i.clone(), vec![(i, C::one())]);
        }
        op
    }

    /// Sets `<row| op |col> += c`.
    pub fn add_entry(&mut self, row: Idx, col: Idx, c: C) {
        let e = self.cols.entry(col).or_default();
        match e.iter_mut().find(|(r, _)| *r == row) {
            Some(slot) => slot.1 = slot.1.add(&c),
            None => e.push((row, c)),
        }
    }

    pub fn entry(&self, row: &Idx, col: &Idx) -> C {
        self.cols
            .get(col)
            .and_then(|c| c.iter().find(|(r, _)| r == row))
            .map(|(_, v)| v.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn column(&self, col: &Idx) -> Vector<C> {
        let mut v = Vector::zero(self.n, self.m);
        if let Some(c) = self.cols.get(col) {
            for (r, x) in c {
                v.add_at(r.clone(), x.clone());
            }
        }
        v
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TensorOp<D> {
        TensorOp {
            n: self.n,
            m: self.m,
            cols: self.cols.iter().map(|(k, c)| (k.clone(), c.iter().map(|(r, v)| (r.clone(), f(v))).collect())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|v| v.scale(s))
    }

    /// Applies the operator on the tensor factors `pos` of `v`; operator
    /// entries multiply existing coefficients from the left.
    pub fn apply_at(&self, pos: &[usize], v: &Vector<C>) -> Vector<C> {
        assert_eq!(pos.len(), self.m);
        let mut out = Vector::zero(v.n, v.m);
        let mut key = Idx::new();
        for (i, c) in &v.data {
            key.clear();
            key.extend(pos.iter().map(|&p| i[p]));
            if let Some(col) = self.cols.get(&key) {
                for (r, e) in col {
                    let mut j = i.clone();
                    for (k, &p) in pos.iter().enumerate() {
                        j[p] = r[k];
                    }
                    out.add_at(j, e.mul(c));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector<C>) -> Vector<C> {
        let pos: Vec<usize> = (0..self.m).collect();
        self.apply_at(&pos, v)
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        let mut r = TensorOp::zero(self.n, self.m);
        for col in o.cols.keys() {
            let v = self.apply(&o.column(col));
            let entries: Vec<_> = v.data.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !entries.is_empty() {
                r.cols.insert(col.clone(), entries);
            }
        }
        r
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (col, es) in &o.cols {
            for (row, c) in es {
                r.add_entry(row.clone(), col.clone(), c.clone());
            }
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    /// The operator acting on factors `pos` of `m`-fold space, identity elsewhere.
    pub fn embed(&self, pos: &[usize], m: usize) -> Self {
        let mut r = TensorOp::zero(self.n, m);
        for col in all_indices(self.n, m) {
            let v = self.apply_at(pos, &Vector::basis(self.n, &col));
            if !v.data.is_empty() {
                r.cols.insert(col, v.data.into_iter().collect());
            }
        }
        r
    }

    /// Transpose in tensor factor `k`.
    pub fn transpose_factor(&self, k: usize) -> Self {
        let mut r = TensorOp::zero(self.n, self.m);
        for (col, es) in &self.cols {
            for (row, c) in es {
                let (mut r2, mut c2) = (row.clone(), col.clone());
                std::mem::swap(&mut r2[k], &mut c2[k]);
                r.add_entry(r2, c2, c.clone());
            }
        }
        r
    }

    /// Whether all entries vanish.
    pub fn is_zero(&self) -> bool {
        self.cols.values().all(|c| c.iter().all(|(_, v)| v.is_zero()))
    }

    /// Entrywise equality.
    pub fn equals(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> C {
        let mut acc = C::zero();
        for (col, es) in &self.cols {
            for (r, v) in es {
                if r == col {
                    acc = acc.add(v);
                }
            }
        }
        acc
    }
}

impl TensorOp<Scalar> {
    /// Scalar operator applied to a vector over any ring.
    pub fn act<R: Ring>(&self, pos: &[usize], v: &Vector<R>) -> Vector<R> {
        let mut out = Vector::zero(v.n, v.m);
        let mut key = Idx::new();
        for (i, c) in &v.data {
            key.clear();
            key.extend(pos.iter().map(|&p| i[p]));
            if let Some(col) = self.cols.get(&key) {
                for (r, e) in col {
                    let mut j = i.clone();
                    for (k, &p) in pos.iter().enumerate() {
                        j[p] = r[k];
                    }
                    out.add_at(j, c.scale(e));
                }
            }
        }
        out
    }

    pub fn bar(&self) -> Self {
        self.map(|v| v.bar())
    }

    /// Lifts scalar entries into another ring.
    pub fn lift<R: Ring>(&self) -> TensorOp<R> {
        self.map(|v| R::from_scalar(v.clone()))
    }
}

/// One factor of an operator product: a scalar or ring operator placed on
/// some tensor positions.
#[derive(Clone, Debug)]
pub enum Factor<R> {
    Scalar(Arc<TensorOp<Scalar>>, Vec<usize>),
    Ring(Arc<TensorOp<R>>, Vec<usize>),
}

/// Product of factors in written order; applied right to left.
#[derive(Clone, Debug)]
pub struct Chain<R> {
    pub n: usize,
    pub m: usize,
    pub factors: Vec<Factor<R>>,
}

impl<R: Ring> Chain<R> {
    pub fn new(n: usize, m: usize) -> Self {
        Chain { n, m, factors: Vec::new() }
    }

    pub fn scalar(mut self, op: &Arc<TensorOp<Scalar>>, pos: &[usize]) -> Self {
        self.factors.push(Factor::Scalar(op.clone(), pos.to_vec()));
        self
    }

    pub fn ring(mut self, op: &Arc<TensorOp<R>>, pos: &[usize]) -> Self {
        self.factors.push(Factor::Ring(op.clone(), pos.to_vec()));
        self
    }

    pub fn then(mut self, o: &Chain<R>) -> Self {
        self.factors.extend(o.factors.iter().cloned());
        self
    }

    pub fn apply(&self, v: &Vector<R>) -> Vector<R> {
        let mut cur = v.clone();
        for f in self.factors.iter().rev() {
            cur = match f {
                Factor::Scalar(op, pos) => op.act(pos, &cur),
                Factor::Ring(op, pos) => op.apply_at(pos, &cur),
            };
        }
        cur
    }

    /// Full operator, one column per basis vector.
    pub fn materialize(&self) -> TensorOp<R> {
        let mut r = TensorOp::zero(self.n, self.m);
        for col in all_indices(self.n, self.m) {
            let v = self.apply(&Vector::basis(self.n, &col));
            if !v.data.is_empty() {
                r.cols.insert(col, v.data.into_iter().collect());
            }
        }
        r
    }
}
