//! Commutative-ring plumbing shared by scalars and forms.

use std::collections::HashMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, FieldElement};

/// The operations the determinant and discriminant formulas need.
///
/// Forms are graded: adding two nonzero forms of different degree is a
/// programmer error and panics. A zero form acts as the identity under
/// addition regardless of its declared degree.
pub trait Ring: Clone + Debug + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn scaled(&self, k: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// Determinant of a square matrix. The default expands along rows with
    /// memoised minors, which uses no division.
    fn determinant(rows: &[Vec<Self>]) -> Self {
        laplace_det(rows)
    }
}

impl Ring for FieldElement {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scaled(&self, k: i64) -> Self {
        self.scale_int(k)
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn determinant(rows: &[Vec<Self>]) -> Self {
        field_det(rows)
    }
}

fn laplace_det<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    assert!(n > 0, "determinant of an empty matrix needs a ring witness");
    assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
    assert!(n <= 20, "Laplace expansion limited to 20x20");
    // minor(k, cols) = determinant of rows k.. restricted to the column set `cols`
    let mut memo: HashMap<u32, R> = HashMap::new();
    fn go<R: Ring>(rows: &[Vec<R>], row: usize, cols: u32, memo: &mut HashMap<u32, R>) -> R {
        let n = rows.len();
        if row == n {
            return rows[0][0].one_like();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc: Option<R> = None;
        let mut sign_flip = false;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = &rows[row][c];
            if !entry.is_zero() {
                let minor = go(rows, row + 1, cols & !(1 << c), memo);
                let term = entry.times(&minor);
                acc = Some(match acc {
                    None if sign_flip => term.zero_like().minus(&term),
                    None => term,
                    Some(a) if sign_flip => a.minus(&term),
                    Some(a) => a.plus(&term),
                });
            }
            sign_flip = !sign_flip;
        }
        let v = acc.unwrap_or_else(|| rows[0][0].zero_like());
        memo.insert(cols, v.clone());
        v
    }
    go(rows, 0, (1u32 << n) - 1, &mut memo)
}

/// Determinant over a field: fraction-free Bareiss elimination on cleared
/// integer rows over Q, plain Gaussian elimination over F_p.
pub fn field_det(rows: &[Vec<FieldElement>]) -> FieldElement {
    let n = rows.len();
    assert!(n > 0 && rows.iter().all(|r| r.len() == n), "matrix is not square");
    let field = rows[0][0].field();
    match field {
        Field::Rationals => {
            let mut scale = BigInt::one();
            let mut m: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|row| {
                    let lcm = row.iter().fold(BigInt::one(), |acc, x| {
                        acc.lcm(x.as_rational().expect("rational entry").denom())
                    });
                    scale *= &lcm;
                    row.iter()
                        .map(|x| {
                            let q = x.as_rational().expect("rational entry");
                            q.numer() * (&lcm / q.denom())
                        })
                        .collect()
                })
                .collect();
            let det = bareiss(&mut m);
            FieldElement::Rational(BigRational::new(det, scale))
        }
        Field::Prime(_) => gauss_det(rows.to_vec()),
    }
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

fn gauss_det(mut m: Vec<Vec<FieldElement>>) -> FieldElement {
    let n = m.len();
    let field = m[0][0].field();
    let mut det = field.one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return field.zero();
        };
        if piv != k {
            m.swap(k, piv);
            det = -det;
        }
        let inv = m[k][k].inv().expect("nonzero pivot");
        det = &det * &m[k][k];
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] * &inv;
            for j in k..n {
                let v = &m[i][j] - &(&factor * &m[k][j]);
                m[i][j] = v;
            }
        }
    }
    det
}

/// Rank of a matrix over a field by row reduction.
pub fn field_rank(rows: &[Vec<FieldElement>]) -> usize {
    let mut m = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for i in 0..nrows {
            if i == rank || m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..ncols {
                let v = &m[i][j] - &(&factor * &m[rank][j]);
                m[i][j] = v;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Sylvester resultant of two coefficient lists, highest power first,
/// taken with their formal (declared) degrees.
pub fn sylvester_resultant<R: Ring>(f: &[R], g: &[R]) -> R {
    assert!(!f.is_empty() && !g.is_empty(), "coefficient lists must be nonempty");
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return f[0].one_like();
    }
    let zero = f[0].zero_like();
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![zero.clone(); size];
        for (i, c) in f.iter().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    let gzero = g[0].zero_like();
    for shift in 0..m {
        let mut row = vec![gzero.clone(); size];
        for (i, c) in g.iter().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    R::determinant(&rows)
}
