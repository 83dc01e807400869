//! Laplacian spectra: exact interval counts and multiplicities, closed forms
//! for paths and cycles, and a floating-point Jacobi eigensolver used as an
//! independent cross-check.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::{inertia, integer, ExactMatrix, Rational};
use crate::graph::Graph;

/// Slack for float comparisons in the interlacing check.
pub const INTERLACING_SLACK: f64 = 1e-8;

/// Jacobi sweeps before giving up.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// `D(G) - A(G)` with integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn to_exact(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, |i, j| integer(self.get(i, j)))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&v| v as f64).collect()
    }

    /// `L v` in exact integer arithmetic.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.n();
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as i64;
        for &w in g.neighbors(v) {
            entries[v * n + w] = -1;
        }
    }
    LaplacianMatrix { n, entries }
}

/// Number of Laplacian eigenvalues in the half-open interval `[a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCount {
    pub a: Rational,
    pub b: Rational,
    pub count: usize,
}

/// Number of Laplacian eigenvalues strictly below `c`.
pub fn count_below(g: &Graph, c: &Rational) -> usize {
    let m = laplacian(g).to_exact().shifted(c);
    inertia(&m).expect("Laplacian is symmetric").negatives
}

/// Exact `m_G[a, b)`: eigenvalues below `b` minus eigenvalues below `a`.
pub fn count_interval(g: &Graph, a: &Rational, b: &Rational) -> Result<IntervalCount> {
    if a >= b {
        return Err(Error::InvalidInterval {
            lower: a.to_string(),
            upper: b.to_string(),
        });
    }
    let count = count_below(g, b) - count_below(g, a);
    Ok(IntervalCount {
        a: a.clone(),
        b: b.clone(),
        count,
    })
}

/// `m_G[0, 1)`.
pub fn count_below_one(g: &Graph) -> usize {
    count_interval(g, &integer(0), &integer(1))
        .expect("0 < 1")
        .count
}

/// Multiplicity of `mu` as a Laplacian eigenvalue (nullity of `L - mu I`).
pub fn multiplicity(g: &Graph, mu: &Rational) -> usize {
    let m = laplacian(g).to_exact().shifted(mu);
    inertia(&m).expect("Laplacian is symmetric").zeros
}

/// Eigenvalues in non-decreasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
}

impl Spectrum {
    fn sorted(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn count_below(&self, x: f64) -> usize {
        self.values.iter().filter(|&&v| v < x).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormFamily {
    Path,
    Cycle,
}

/// `2 - 2cos(k pi / n)` for paths and `2 - 2cos(2 k pi / n)` for cycles,
/// `k = 0..n`.
pub fn closed_form_spectrum(family: ClosedFormFamily, n: usize) -> Result<Spectrum> {
    let values = match family {
        ClosedFormFamily::Path if n >= 1 => (0..n)
            .map(|k| 2.0 - 2.0 * (k as f64 * PI / n as f64).cos())
            .collect(),
        ClosedFormFamily::Cycle if n >= 3 => (0..n)
            .map(|k| 2.0 - 2.0 * (2.0 * k as f64 * PI / n as f64).cos())
            .collect(),
        _ => {
            return Err(Error::invalid(format!(
                "closed form for {family:?} needs more vertices, got {n}"
            )))
        }
    };
    Ok(Spectrum::sorted(values))
}

/// Eigenvalues of a symmetric row-major matrix by cyclic Jacobi rotations,
/// stopping once the off-diagonal Frobenius norm drops below `tol`.
pub fn jacobi_eigenvalues(matrix: &[f64], n: usize, tol: f64) -> Result<Vec<f64>> {
    assert_eq!(matrix.len(), n * n);
    if !(tol > 0.0) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let mut a = matrix.to_vec();
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) >= tol {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NumericFailure(sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// All Laplacian eigenvalues in floating point.
pub fn spectrum_float(g: &Graph, tol: f64) -> Result<Spectrum> {
    let l = laplacian(g);
    jacobi_eigenvalues(&l.to_f64(), g.n(), tol).map(|values| Spectrum { values })
}

/// Checks `mu_i(G) <= mu_{i+1}(G - e) <= mu_{i+1}(G)` for `i = 1..n-1`.
pub fn check_interlacing(g: &Graph, edge: (usize, usize)) -> Result<bool> {
    let minus = g.without_edge(edge.0, edge.1)?;
    let full = spectrum_float(g, 1e-12)?;
    let cut = spectrum_float(&minus, 1e-12)?;
    let n = g.n();
    Ok((0..n.saturating_sub(1)).all(|i| {
        full.values[i] <= cut.values[i + 1] + INTERLACING_SLACK
            && cut.values[i + 1] <= full.values[i + 1] + INTERLACING_SLACK
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rational;
    use crate::graph::{make_compass, make_cycle, make_lollipop, make_path, CompassParams};
    use proptest::prelude::*;

    fn one() -> Rational {
        integer(1)
    }

    #[test]
    fn laplacian_small() {
        assert_eq!(
            laplacian(&make_path(2).unwrap()).rows(),
            vec![vec![1, -1], vec![-1, 1]]
        );
        assert_eq!(
            laplacian(&make_cycle(3).unwrap()).rows(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        assert_eq!(laplacian(&make_path(1).unwrap()).rows(), vec![vec![0]]);
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let l = laplacian(&make_lollipop(9, 4).unwrap());
        for row in l.rows() {
            assert_eq!(row.iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn interval_counts_from_examples() {
        let zero = integer(0);
        assert_eq!(
            count_interval(&make_path(5).unwrap(), &zero, &one())
                .unwrap()
                .count,
            2
        );
        assert_eq!(count_below_one(&make_lollipop(12, 8).unwrap()), 4);
        let compass = make_compass(CompassParams::new(14, 8, 4, 3).unwrap()).unwrap();
        assert_eq!(count_below_one(&compass), 5);
        assert_eq!(count_below_one(&make_cycle(6).unwrap()), 1);
    }

    #[test]
    fn interval_rejects_empty() {
        let g = make_path(3).unwrap();
        assert!(matches!(
            count_interval(&g, &one(), &one()),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(count_interval(&g, &integer(2), &one()).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&make_cycle(6).unwrap(), &one()), 2);
        assert_eq!(multiplicity(&make_path(3).unwrap(), &one()), 1);
        assert_eq!(multiplicity(&make_lollipop(9, 6).unwrap(), &one()), 2);
    }

    #[test]
    fn closed_forms() {
        let close = |s: &Spectrum, want: &[f64]| {
            assert_eq!(s.len(), want.len());
            for (a, b) in s.values.iter().zip(want) {
                assert!((a - b).abs() < 1e-12, "{:?} vs {want:?}", s.values);
            }
        };
        close(
            &closed_form_spectrum(ClosedFormFamily::Path, 3).unwrap(),
            &[0.0, 1.0, 3.0],
        );
        close(
            &closed_form_spectrum(ClosedFormFamily::Cycle, 6).unwrap(),
            &[0.0, 1.0, 1.0, 3.0, 3.0, 4.0],
        );
        close(
            &closed_form_spectrum(ClosedFormFamily::Cycle, 4).unwrap(),
            &[0.0, 2.0, 2.0, 4.0],
        );
        assert!(closed_form_spectrum(ClosedFormFamily::Cycle, 2).is_err());
        assert!(closed_form_spectrum(ClosedFormFamily::Path, 0).is_err());
    }

    #[test]
    fn jacobi_matches_closed_forms() {
        let tol = 1e-10;
        let s = spectrum_float(&make_path(2).unwrap(), tol).unwrap();
        assert!((s.values[0]).abs() < 1e-9 && (s.values[1] - 2.0).abs() < 1e-9);
        let s = spectrum_float(&make_cycle(3).unwrap(), tol).unwrap();
        for (a, b) in s.values.iter().zip([0.0, 3.0, 3.0]) {
            assert!((a - b).abs() < 1e-9);
        }
        let s = spectrum_float(&make_path(6).unwrap(), tol).unwrap();
        let want = closed_form_spectrum(ClosedFormFamily::Path, 6).unwrap();
        for (a, b) in s.values.iter().zip(&want.values) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn jacobi_rejects_bad_tolerance() {
        assert!(spectrum_float(&make_path(3).unwrap(), 0.0).is_err());
    }

    #[test]
    fn interlacing_examples() {
        let c6 = make_cycle(6).unwrap();
        for (u, v) in c6.edges().collect::<Vec<_>>() {
            assert!(check_interlacing(&c6, (u, v)).unwrap());
        }
        assert!(check_interlacing(&make_path(4).unwrap(), (1, 2)).unwrap());
        assert!(check_interlacing(&make_lollipop(12, 8).unwrap(), (0, 7)).unwrap());
        assert!(matches!(
            check_interlacing(&make_path(4).unwrap(), (0, 2)),
            Err(Error::EdgeNotPresent(0, 2))
        ));
    }

    #[test]
    fn partition_sums_to_order() {
        let g = make_lollipop(11, 5).unwrap();
        let cuts = [0, 1, 2, 3, 12].map(integer);
        let total: usize = cuts
            .windows(2)
            .map(|w| count_interval(&g, &w[0], &w[1]).unwrap().count)
            .sum();
        assert_eq!(total, 11);
    }

    #[test]
    fn tiny_interval_counts_components() {
        for g in [
            make_cycle(9).unwrap(),
            make_lollipop(14, 5).unwrap(),
            make_path(7).unwrap(),
        ] {
            let n = g.n() as i64;
            let eps = rational(1, n * n);
            assert_eq!(count_interval(&g, &integer(0), &eps).unwrap().count, 1);
        }
    }

    fn connected_graph() -> impl Strategy<Value = Graph> {
        (
            2usize..12,
            proptest::collection::vec((0usize..64, 0usize..64), 0..20),
            any::<u64>(),
        )
            .prop_map(|(n, extra, seed)| {
                // random spanning tree plus extra edges
                let mut g = Graph::empty(n);
                for v in 1..n {
                    let parent = (seed.wrapping_mul(v as u64 + 7) % v as u64) as usize;
                    g.try_add_edge(parent, v).unwrap();
                }
                for (a, b) in extra {
                    let (a, b) = (a % n, b % n);
                    if a != b && !g.has_edge(a, b) {
                        g.try_add_edge(a, b).unwrap();
                    }
                }
                g
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn exact_count_agrees_with_float(g in connected_graph()) {
            let s = spectrum_float(&g, 1e-12).unwrap();
            let near_one = s.values.iter().any(|v| (v - 1.0).abs() < 1e-6);
            if !near_one {
                prop_assert_eq!(count_below_one(&g), s.count_below(1.0 - 1e-6));
            }
        }

        #[test]
        fn union_is_additive(a in connected_graph(), b in connected_graph(), num in 1i64..20) {
            let lo = integer(0);
            let hi = rational(num, 4);
            let u = a.disjoint_union(&b);
            let cu = count_interval(&u, &lo, &hi).unwrap().count;
            let ca = count_interval(&a, &lo, &hi).unwrap().count;
            let cb = count_interval(&b, &lo, &hi).unwrap().count;
            prop_assert_eq!(cu, ca + cb);
            prop_assert_eq!(multiplicity(&u, &one()), multiplicity(&a, &one()) + multiplicity(&b, &one()));
        }

        #[test]
        fn sylvester_matches_float_signs(
            n in 1usize..7,
            raw in proptest::collection::vec(-4i64..5, 49),
        ) {
            let mut rows = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in i..n {
                    rows[i][j] = raw[i * 7 + j];
                    rows[j][i] = raw[i * 7 + j];
                }
            }
            let flat: Vec<f64> = rows.iter().flatten().map(|&v| v as f64).collect();
            let eig = jacobi_eigenvalues(&flat, n, 1e-12).unwrap();
            // only compare when no eigenvalue is ambiguous near zero
            prop_assume!(eig.iter().all(|v| v.abs() > 1e-6 || v.abs() < 1e-10));
            let exact = inertia(&ExactMatrix::from_integer_rows(&rows)).unwrap();
            prop_assert_eq!(exact.negatives, eig.iter().filter(|&&v| v < -1e-8).count());
            prop_assert_eq!(exact.positives, eig.iter().filter(|&&v| v > 1e-8).count());
            prop_assert_eq!(exact.zeros, eig.iter().filter(|&&v| v.abs() <= 1e-8).count());
        }
    }
}
