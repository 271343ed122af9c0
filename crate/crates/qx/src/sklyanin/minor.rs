use crate::ncalg::Ring;
use crate::scalars::Scalar;
use crate::tensorops::{bracket, idx, inversions, matrix_op, mq, permutations, r_t1, sort_with_sign, Chain, Idx, Matrix, TensorOp, Vector};
use std::sync::{Arc, OnceLock, Mutex};
use std::collections::HashMap;

/// Structure constants: `q` or, with `bar`, `q^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Consts {
    pub bar: bool,
}

impl Consts {
    pub const Q: Consts = Consts { bar: false };
    pub const QINV: Consts = Consts { bar: true };

    pub fn mq(self, e: i32) -> Scalar {
        mq(e, self.bar)
    }

    pub fn q(self) -> Scalar {
        Scalar::qpow(if self.bar { -1 } else { 1 })
    }

    pub fn s(self, s: Scalar) -> Scalar {
        if self.bar {
            s.bar()
        } else {
            s
        }
    }
}

static RT: OnceLock<Mutex<HashMap<(usize, bool), Arc<TensorOp<Scalar>>>>> = OnceLock::new();

/// Cached `R^{t_1}` (or its bar image).
pub fn rt_op(n: usize, c: Consts) -> Arc<TensorOp<Scalar>> {
    let m = RT.get_or_init(|| Mutex::new(HashMap::new()));
    m.lock()
        .unwrap()
        .entry((n, c.bar))
        .or_insert_with(|| Arc::new(if c.bar { r_t1(n).bar() } else { r_t1(n) }))
        .clone()
}

/// Coefficient of `e_{rows}` in `Ã_m w`.
pub fn antisym_coeff<R: Ring>(w: &Vector<R>, rows: &[usize], c: Consts) -> R {
    let r: Idx = rows.iter().map(|&i| (i - 1) as u8).collect();
    let (sorted, lr) = match sort_with_sign(&r) {
        Some(x) => x,
        None => return R::zero(),
    };
    let mut acc = R::zero();
    for t in permutations(rows.len()) {
        let key: Idx = t.iter().map(|&k| sorted[k]).collect();
        if let Some(v) = w.data.get(&key) {
            acc = acc.add(&v.scale(&c.mq((inversions(&t) + lr) as i32)));
        }
    }
    acc
}

fn basis_of(cols: &[usize]) -> Idx {
    idx(&cols.iter().map(|&c| c - 1).collect::<Vec<_>>())
}

/// `⟨X_1 … X_m⟩` for the identity order.
pub fn bracket_chain<R: Ring>(x: &Matrix<R>, m: usize, c: Consts) -> Chain<R> {
    let n = x.len();
    let order: Vec<usize> = (1..=m).collect();
    bracket(&Arc::new(matrix_op(x)), &rt_op(n, c), &order)
}

/// Sklyanin minor `X^{rows}_{cols}` of an arbitrary square matrix; rows and
/// columns are 1-based sequences.
pub fn sklyanin_minor_of<R: Ring>(x: &Matrix<R>, rows: &[usize], cols: &[usize], c: Consts) -> R {
    assert_eq!(rows.len(), cols.len(), "cardinality mismatch");
    let n = x.len();
    let m = rows.len();
    if m == 0 {
        return R::one();
    }
    let chain = bracket_chain(x, m, c);
    let w = chain.apply(&Vector::basis(n, &basis_of(cols)));
    antisym_coeff(&w, rows, c)
}

/// Auxiliary minor `X̌^{rows}_{cols, col_c}` with `|rows| = |cols| + 1`.
pub fn aux_minor_of<R: Ring>(x: &Matrix<R>, rows: &[usize], cols: &[usize], col_c: usize, c: Consts) -> R {
    assert_eq!(rows.len(), cols.len() + 1, "aux minor needs m rows and m-1 columns");
    let n = x.len();
    let m = rows.len();
    let mut chain = bracket_chain(x, m - 1, c);
    chain.m = m;
    let rt = rt_op(n, c);
    for k in 0..m - 1 {
        chain = chain.scalar(&rt, &[k, m - 1]);
    }
    let mut all: Vec<usize> = cols.to_vec();
    all.push(col_c);
    let w = chain.apply(&Vector::basis(n, &basis_of(&all)));
    antisym_coeff(&w, rows, c)
}

/// Principal submatrix on the 1-based index list `set`.
pub fn submatrix<R: Clone>(x: &Matrix<R>, set: &[usize]) -> Matrix<R> {
    set.iter().map(|&i| set.iter().map(|&j| x[i - 1][j - 1].clone()).collect()).collect()
}

/// Submatrix with the given rows and columns.
pub fn block<R: Clone>(x: &Matrix<R>, rows: &[usize], cols: &[usize]) -> Matrix<R> {
    rows.iter().map(|&i| cols.iter().map(|&j| x[i - 1][j - 1].clone()).collect()).collect()
}

/// Sklyanin determinant of a matrix.
pub fn sdet_of<R: Ring>(x: &Matrix<R>, c: Consts) -> R {
    let f: Vec<usize> = (1..=x.len()).collect();
    sklyanin_minor_of(x, &f, &f, c)
}

/// `sdet(X_S)` of the principal submatrix on `set` (1 for the empty set).
pub fn sdet_sub<R: Ring>(x: &Matrix<R>, set: &[usize], c: Consts) -> R {
    sdet_of(&submatrix(x, set), c)
}

/// Comatrix `x̂_ij = (-q)^{i-N} X̌^{1…N}_{1…î…N, j}` of an arbitrary matrix.
pub fn comatrix_of<R: Ring>(x: &Matrix<R>, c: Consts) -> Matrix<R> {
    let n = x.len();
    let rows: Vec<usize> = (1..=n).collect();
    (1..=n)
        .map(|i| {
            let cols: Vec<usize> = (1..=n).filter(|&k| k != i).collect();
            (1..=n).map(|j| aux_minor_of(x, &rows, &cols, j, c).scale(&c.mq(i as i32 - n as i32))).collect()
        })
        .collect()
}
