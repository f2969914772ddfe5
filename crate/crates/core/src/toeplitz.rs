//! Toeplitz matrices in the generators `x1..xn` and their principal minors.
//!
//! `T(k)` is the k-by-k matrix with entry `x_{i-j+1}` at row i, column j
//! (1-based), under the convention `x_0 = 1` and `x_m = 0` for m < 0:
//! generators fill the diagonal and below, ones sit on the first
//! superdiagonal, zeros above it. Its leading principal minors
//! `m_k = det T(k)` satisfy the first-column cofactor recurrence
//!
//! ```text
//! m_k = sum_{i=1..k} (-1)^(i-1) x_i m_{k-i},    m_0 = 1,
//! ```
//!
//! which [`minor_table`] uses as the single source of the minors everywhere.
//! Two independent division-free determinant routines (Leibniz sum and
//! Berkowitz) exist purely to cross-check the recurrence, and the recurrence
//! inverts to recover the generators from the minors:
//!
//! ```text
//! x_k = sum_{i=1..k} (-1)^(i-1) m_i x_{k-i},    x_0 = 1.
//! ```

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// Hard cap on the Leibniz expansion; k! permutations beyond this are not
/// worth enumerating when the Berkowitz routine covers larger sizes.
pub const DET_LEIBNIZ_MAX_SIZE: usize = 8;

/// A square matrix with polynomial entries over one ring and variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingSpec,
    nvars: usize,
    size: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    /// Builds a matrix from row vectors; all rows must have the same length
    /// as the row count and all entries must share ring and variable count.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Range(
                "matrix must have at least one row".to_string(),
            ));
        }
        for row in &rows {
            if row.len() != size {
                return Err(Error::LengthMismatch {
                    expected: size,
                    got: row.len(),
                });
            }
        }
        let ring = rows[0][0].ring().clone();
        let nvars = rows[0][0].nvars();
        for entry in rows.iter().flatten() {
            if entry.ring() != &ring || entry.nvars() != nvars {
                return Err(Error::SpecMismatch(format!(
                    "matrix entry over {} in {} variable(s) does not match {} in {} variable(s)",
                    entry.ring(),
                    entry.nvars(),
                    ring,
                    nvars
                )));
            }
        }
        Ok(PolyMatrix {
            ring,
            nvars,
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at `row`, `col` (0-based).
    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.size + col]
    }

    /// A copy of the matrix with column 0 replaced by `column`.
    pub fn with_first_column(&self, column: &[Polynomial]) -> Result<Self> {
        if column.len() != self.size {
            return Err(Error::LengthMismatch {
                expected: self.size,
                got: column.len(),
            });
        }
        let mut out = self.clone();
        for (row, value) in column.iter().enumerate() {
            if value.ring() != &self.ring || value.nvars() != self.nvars {
                return Err(Error::SpecMismatch(format!(
                    "column entry over {} in {} variable(s) does not match the matrix",
                    value.ring(),
                    value.nvars()
                )));
            }
            out.entries[row * self.size] = value.clone();
        }
        Ok(out)
    }
}

/// Constructs `T(k)` over `ring` inside the polynomial ring in `x1..xn`.
pub fn build_toeplitz(ring: &RingSpec, n: usize, k: usize) -> Result<PolyMatrix> {
    if k < 1 || k > n {
        return Err(Error::Range(format!(
            "matrix size k must satisfy 1 <= k <= n = {n}, got {k}"
        )));
    }
    let mut entries = Vec::with_capacity(k * k);
    for i in 1..=k as i64 {
        for j in 1..=k as i64 {
            let d = i - j + 1;
            let entry = if d >= 1 {
                Polynomial::variable(ring, n, d as usize).expect("d <= k <= n")
            } else if d == 0 {
                Polynomial::one(ring, n)
            } else {
                Polynomial::zero(ring, n)
            };
            entries.push(entry);
        }
    }
    Ok(PolyMatrix {
        ring: ring.clone(),
        nvars: n,
        size: k,
        entries,
    })
}

/// The precomputed minor sequence `m_0 = 1, m_1, ..., m_n`.
///
/// Guaranteed invariants: `minors()[0]` is the constant 1 and `minors()[k]`
/// only involves `x1..xk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorTable {
    ring: RingSpec,
    nvars: usize,
    minors: Vec<Polynomial>,
}

impl MinorTable {
    /// Assembles a table from explicit minors, validating the structural
    /// invariants (length n + 1, m_0 = 1, m_k supported on x1..xk). The
    /// entries are not required to satisfy the minor recurrence, so tests
    /// can feed deliberately corrupted tables.
    pub fn from_minors(ring: &RingSpec, nvars: usize, minors: Vec<Polynomial>) -> Result<Self> {
        if minors.len() != nvars + 1 {
            return Err(Error::LengthMismatch {
                expected: nvars + 1,
                got: minors.len(),
            });
        }
        for (k, m) in minors.iter().enumerate() {
            if m.ring() != ring || m.nvars() != nvars {
                return Err(Error::SpecMismatch(format!(
                    "minor {k} over {} in {} variable(s) does not match table over {} in {} variable(s)",
                    m.ring(),
                    m.nvars(),
                    ring,
                    nvars
                )));
            }
        }
        if minors[0] != Polynomial::one(ring, nvars) {
            return Err(Error::Range(
                "minor table must start with m_0 = 1".to_string(),
            ));
        }
        for (k, m) in minors.iter().enumerate() {
            for (mono, _) in m.terms() {
                if mono.exps().iter().skip(k).any(|&e| e != 0) {
                    return Err(Error::Range(format!(
                        "minor {k} must only involve x1..x{k}"
                    )));
                }
            }
        }
        Ok(MinorTable {
            ring: ring.clone(),
            nvars,
            minors,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The minors `m_0..m_n`; index k holds `m_k`.
    pub fn minors(&self) -> &[Polynomial] {
        &self.minors
    }
}

/// Computes `m_0..m_n` once via the minor recurrence.
pub fn minor_table(ring: &RingSpec, n: usize) -> MinorTable {
    MinorTable {
        ring: ring.clone(),
        nvars: n,
        minors: minors_up_to(ring, n, n),
    }
}

/// The single minor `m_k` in the polynomial ring with n variables, 0 <= k <= n.
pub fn minor_recursive(ring: &RingSpec, n: usize, k: usize) -> Result<Polynomial> {
    if k > n {
        return Err(Error::Range(format!(
            "k must satisfy 0 <= k <= n = {n}, got {k}"
        )));
    }
    Ok(minors_up_to(ring, n, k)
        .pop()
        .expect("nonempty by construction"))
}

/// `m_0..m_upto` via the recurrence; requires `upto <= n`.
fn minors_up_to(ring: &RingSpec, n: usize, upto: usize) -> Vec<Polynomial> {
    let mut minors = vec![Polynomial::one(ring, n)];
    for k in 1..=upto {
        let mut acc = Polynomial::zero(ring, n);
        for i in 1..=k {
            let xi = Polynomial::variable(ring, n, i).expect("i <= upto <= n");
            let term = xi.mul_raw(&minors[k - i]);
            acc = if i % 2 == 1 {
                acc.add_raw(&term)
            } else {
                acc.sub_raw(&term)
            };
        }
        minors.push(acc);
    }
    minors
}

/// Determinant as the full signed permutation sum. Obviously correct and
/// division-free, but factorial cost, so sizes beyond
/// [`DET_LEIBNIZ_MAX_SIZE`] are refused.
pub fn det_leibniz(matrix: &PolyMatrix) -> Result<Polynomial> {
    let k = matrix.size();
    if k > DET_LEIBNIZ_MAX_SIZE {
        return Err(Error::SizeTooLarge {
            size: k,
            max: DET_LEIBNIZ_MAX_SIZE,
        });
    }
    let mut det = Polynomial::zero(matrix.ring(), matrix.nvars());
    let mut perm: Vec<usize> = (0..k).collect();
    let mut positive = true;
    det = det.add_raw(&permutation_product(matrix, &perm, positive));
    // Heap's algorithm: each step swaps exactly one pair, so the sign
    // simply alternates.
    let mut counters = vec![0usize; k];
    let mut i = 0;
    while i < k {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            positive = !positive;
            det = det.add_raw(&permutation_product(matrix, &perm, positive));
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(det)
}

fn permutation_product(matrix: &PolyMatrix, perm: &[usize], positive: bool) -> Polynomial {
    let mut prod = Polynomial::one(matrix.ring(), matrix.nvars());
    for (row, &col) in perm.iter().enumerate() {
        let entry = matrix.entry(row, col);
        if entry.is_zero() {
            return Polynomial::zero(matrix.ring(), matrix.nvars());
        }
        prod = prod.mul_raw(entry);
    }
    if positive {
        prod
    } else {
        prod.neg()
    }
}

/// Division-free determinant by the Berkowitz iteration: the characteristic
/// polynomial coefficient vector of each trailing principal submatrix is
/// obtained from the previous one by a lower-triangular Toeplitz multiply,
/// and the determinant is the constant coefficient. Polynomial cost, valid
/// over any commutative ring.
pub fn det_berkowitz(matrix: &PolyMatrix) -> Polynomial {
    let n = matrix.size();
    let ring = matrix.ring();
    let nvars = matrix.nvars();
    let minus_one = Polynomial::one(ring, nvars).neg();

    // Coefficient vector of the characteristic polynomial of the trailing
    // m-by-m submatrix, highest power first; starts as [1] for the empty
    // matrix.
    let mut coeffs = vec![Polynomial::one(ring, nvars)];
    for i in (0..n).rev() {
        let m = n - i;
        // First column of the (m+1) x m Toeplitz factor:
        // [-1, a_ii, R C, R M C, ..., R M^(m-2) C] where R is the row to the
        // right of a_ii, C the column below it, M the trailing submatrix.
        let mut first_col = Vec::with_capacity(m + 1);
        first_col.push(minus_one.clone());
        first_col.push(matrix.entry(i, i).clone());
        if m >= 2 {
            let mut w: Vec<Polynomial> = (i + 1..n).map(|r| matrix.entry(r, i).clone()).collect();
            for step in 0..m - 1 {
                let mut dot = Polynomial::zero(ring, nvars);
                for (offset, col) in (i + 1..n).enumerate() {
                    dot = dot.add_raw(&matrix.entry(i, col).mul_raw(&w[offset]));
                }
                first_col.push(dot);
                if step + 1 < m - 1 {
                    w = mat_vec_trailing(matrix, i + 1, &w);
                }
            }
        }
        let mut next = Vec::with_capacity(m + 1);
        for r in 0..=m {
            let mut sum = Polynomial::zero(ring, nvars);
            for (c, coeff) in coeffs.iter().enumerate().take(r + 1) {
                sum = sum.add_raw(&first_col[r - c].mul_raw(coeff));
            }
            next.push(sum);
        }
        coeffs = next;
    }
    coeffs.pop().expect("vector has n + 1 entries")
}

/// Multiplies the trailing principal submatrix starting at `start` with `v`.
fn mat_vec_trailing(matrix: &PolyMatrix, start: usize, v: &[Polynomial]) -> Vec<Polynomial> {
    let n = matrix.size();
    (start..n)
        .map(|r| {
            let mut sum = Polynomial::zero(matrix.ring(), matrix.nvars());
            for (offset, c) in (start..n).enumerate() {
                sum = sum.add_raw(&matrix.entry(r, c).mul_raw(&v[offset]));
            }
            sum
        })
        .collect()
}

/// Determinant of `T(k)` with its first column replaced by `column`,
/// evaluated through the minor recurrence:
/// `sum_{i=1..k} (-1)^(i-1) column[i-1] * m_{k-i}`.
pub fn first_column_det(ring: &RingSpec, n: usize, column: &[Polynomial]) -> Result<Polynomial> {
    let k = column.len();
    if k == 0 || k > n {
        return Err(Error::Range(format!(
            "column length must satisfy 1 <= k <= n = {n}, got {k}"
        )));
    }
    for a in column {
        if a.ring() != ring || a.nvars() != n {
            return Err(Error::SpecMismatch(format!(
                "column entry over {} in {} variable(s) does not match {} in {} variable(s)",
                a.ring(),
                a.nvars(),
                ring,
                n
            )));
        }
    }
    let minors = minors_up_to(ring, n, k - 1);
    let mut acc = Polynomial::zero(ring, n);
    for (idx, a) in column.iter().enumerate() {
        let term = a.mul_raw(&minors[k - idx - 1]);
        acc = if idx % 2 == 0 {
            acc.add_raw(&term)
        } else {
            acc.sub_raw(&term)
        };
    }
    Ok(acc)
}

/// Runs the inverse recurrence `r_j = sum_{i=1..j} (-1)^(i-1) m_i r_{j-i}`
/// with `r_0 = 1` against the supplied table and returns `r_k`. When the
/// table holds the true minors, `r_k` is the generator `x_k`; the table is
/// taken as input so that inconsistent tables can be observed to fail.
pub fn recover_generator(
    ring: &RingSpec,
    n: usize,
    k: usize,
    minors: &MinorTable,
) -> Result<Polynomial> {
    if k < 1 || k > n {
        return Err(Error::Range(format!(
            "generator index must satisfy 1 <= k <= n = {n}, got {k}"
        )));
    }
    if minors.ring() != ring || minors.nvars() != n {
        return Err(Error::SpecMismatch(format!(
            "minor table over {} in {} variable(s) does not match {} in {} variable(s)",
            minors.ring(),
            minors.nvars(),
            ring,
            n
        )));
    }
    let table = minors.minors();
    let mut recovered = vec![Polynomial::one(ring, n)];
    for j in 1..=k {
        let mut acc = Polynomial::zero(ring, n);
        for i in 1..=j {
            let term = table[i].mul_raw(&recovered[j - i]);
            acc = if i % 2 == 1 {
                acc.add_raw(&term)
            } else {
                acc.sub_raw(&term)
            };
        }
        recovered.push(acc);
    }
    Ok(recovered.pop().expect("nonempty by construction"))
}
