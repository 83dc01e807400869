//! Characteristic polynomials `phi(M; x) = det(xI - M)` of Laplacians.
//!
//! Paths, the auxiliary end-deleted path matrices `B_n` and `H_n`, cycles
//! and lollipops are produced by recurrences; any graph or integer matrix
//! can also be expanded directly by fraction-free elimination over `Z[x]`.
//! The two routes are compared by [`verify_charpoly_identities`].

mod poly;

pub use poly::IntPolynomial;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::Rational;
use crate::graph::{make_cycle, make_lollipop, make_path, Graph};
use crate::spectra::laplacian;

/// `phi(P_n)`: `phi(P_0) = 0`, `phi(P_1) = x`,
/// `phi(P_{k+1}) = (x - 2) phi(P_k) - phi(P_{k-1})`.
pub fn phi_path(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::zero();
    let mut cur = IntPolynomial::x();
    if n == 0 {
        return prev;
    }
    let x_minus_2 = IntPolynomial::x_minus(2);
    for _ in 1..n {
        let next = &(&x_minus_2 * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `B_n`: `L(P_{n+1})` without one end vertex. `H_n`: `L(P_{n+2})` without
/// both end vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxKind {
    B,
    H,
}

/// `x phi(B_n) = phi(P_{n+1}) + phi(P_n)` and `phi(P_{n+1}) = x phi(H_n)`,
/// with `phi(B_0) = phi(H_0) = 1`.
pub fn phi_aux(kind: AuxKind, n: usize) -> Result<IntPolynomial> {
    match kind {
        AuxKind::B => (&phi_path(n + 1) + &phi_path(n)).div_x(),
        AuxKind::H => phi_path(n + 1).div_x(),
    }
}

/// `phi(C_n) = (phi(P_{n+1}) - phi(P_{n-1})) / x + 2(-1)^{n+1}`.
pub fn phi_cycle(n: usize) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let head = (&phi_path(n + 1) - &phi_path(n - 1)).div_x()?;
    let sign = if n % 2 == 1 { 2 } else { -2 };
    Ok(&head + &IntPolynomial::constant(sign))
}

/// Lollipop `C_{n,r}` from the cycle and path polynomials:
///
/// `phi(P_{n-r}) (phi(C_r) - phi(C_r)/x) - phi(C_r) phi(P_{n-r-1})/x
///  - phi(P_{n-r}) phi(P_r)/x`.
pub fn phi_lollipop(n: usize, r: usize) -> Result<IntPolynomial> {
    if r < 3 || r >= n {
        return Err(Error::invalid(format!(
            "lollipop polynomial needs 3 <= r < n, got n = {n}, r = {r}"
        )));
    }
    let cyc = phi_cycle(r)?;
    let tail = phi_path(n - r);
    let tail_short = phi_path(n - r - 1);
    let cyc_over_x = cyc.div_x()?;
    let first = &tail * &(&cyc - &cyc_over_x);
    let second = (&cyc * &tail_short).div_x()?;
    let third = &tail * &phi_path(r).div_x()?;
    Ok(&(&first - &second) - &third)
}

pub fn eval_at(p: &IntPolynomial, x0: &Rational) -> Rational {
    p.eval_at(x0)
}

/// `phi(P_n; 1)`, which cycles through `0, 1, -1` with `n mod 3`.
pub fn path_value_at_one(n: usize) -> i64 {
    [0, 1, -1][n % 3]
}

/// Closed-form `phi(C_{n,r}; 1)` when `d(C_{n,r}) = 0 mod 3`, by `r mod 6`;
/// `None` for `r = 0 mod 6`, where no value is claimed.
pub fn lollipop_value_at_one(r: usize) -> Option<i64> {
    [None, Some(1), Some(2), Some(-4), Some(-1), Some(1)][r % 6]
}

/// `det(xI - M)` by Bareiss elimination over `Z[x]`.
///
/// Every pivot is a leading principal minor of `xI - M`, hence monic, so the
/// divisions are exact over the integers and no pivoting is needed.
pub fn charpoly_of_matrix(rows: &[Vec<i64>]) -> Result<IntPolynomial> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::invalid("matrix must be square"));
    }
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let mut m: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = IntPolynomial::constant(-rows[i][j]);
                    if i == j {
                        &c + &IntPolynomial::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(m[n - 1][n - 1].clone())
}

pub fn charpoly(g: &Graph) -> IntPolynomial {
    charpoly_of_matrix(&laplacian(g).rows()).expect("Laplacian charpoly is exact")
}

/// `phi(L_v(G))`: characteristic polynomial of `L(G)` with row and column
/// `v` deleted.
pub fn charpoly_vertex_deleted(g: &Graph, v: usize) -> IntPolynomial {
    let rows: Vec<Vec<i64>> = laplacian(g)
        .rows()
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, row)| {
            row.into_iter()
                .enumerate()
                .filter(|&(j, _)| j != v)
                .map(|(_, e)| e)
                .collect()
        })
        .collect();
    charpoly_of_matrix(&rows).expect("principal submatrix charpoly is exact")
}

/// `G_1` and `G_2` joined by the edge `u - (|G_1| + v)`.
pub fn join(g1: &Graph, u: usize, g2: &Graph, v: usize) -> Graph {
    let mut g = g1.disjoint_union(g2);
    g.try_add_edge(u, g1.n() + v)
        .expect("join endpoints lie in different components");
    g
}

/// Checks `phi(G) = phi(G1)phi(G2) - phi(G1)phi(L_v(G2)) - phi(G2)phi(L_u(G1))`
/// for the join of `g1` at `u` and `g2` at `v`.
pub fn join_identity_holds(g1: &Graph, u: usize, g2: &Graph, v: usize) -> bool {
    let joined = charpoly(&join(g1, u, g2, v));
    let (p1, p2) = (charpoly(g1), charpoly(g2));
    let rhs = &(&(&p1 * &p2) - &(&p1 * &charpoly_vertex_deleted(g2, v)))
        - &(&p2 * &charpoly_vertex_deleted(g1, u));
    joined == rhs
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub instance: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn record(&mut self, identity: &'static str, instance: String, passed: bool) {
        self.checks.push(IdentityCheck {
            identity,
            instance,
            passed,
        });
    }
}

fn end_deleted_path(kind: AuxKind, n: usize) -> Vec<Vec<i64>> {
    let (order, skip_front, skip_back) = match kind {
        AuxKind::B => (n + 1, 1, 0),
        AuxKind::H => (n + 2, 1, 1),
    };
    let rows = laplacian(&make_path(order).expect("order >= 1")).rows();
    let keep = skip_front..order - skip_back;
    rows[keep.clone()]
        .iter()
        .map(|r| r[keep.clone()].to_vec())
        .collect()
}

/// Checks every recurrence against direct determinant expansion for all
/// orders up to `n_max`, plus the join identity on small family graphs.
pub fn verify_charpoly_identities(n_max: usize) -> Result<IdentityReport> {
    if n_max < 4 {
        return Err(Error::invalid(format!(
            "n_max must be at least 4, got {n_max}"
        )));
    }
    let mut report = IdentityReport::default();
    let det_path: Vec<IntPolynomial> = (0..=n_max + 1)
        .map(|n| match n {
            0 => IntPolynomial::zero(),
            _ => charpoly(&make_path(n).unwrap()),
        })
        .collect();
    let x = IntPolynomial::x();

    for n in 1..=n_max {
        report.record(
            "path recurrence",
            format!("n = {n}"),
            phi_path(n) == det_path[n],
        );
    }
    for n in 0..=n_max {
        let det_b = charpoly_of_matrix(&end_deleted_path(AuxKind::B, n))?;
        let lhs = &x * &det_b;
        report.record(
            "x phi(B_n) = phi(P_n+1) + phi(P_n)",
            format!("n = {n}"),
            lhs == &det_path[n + 1] + &det_path[n]
                && phi_aux(AuxKind::B, n).ok().as_ref() == Some(&det_b),
        );
    }
    for n in 1..=n_max {
        let det_h = charpoly_of_matrix(&end_deleted_path(AuxKind::H, n - 1))?;
        report.record(
            "phi(P_n) = x phi(H_n-1)",
            format!("n = {n}"),
            det_path[n] == &x * &det_h && phi_aux(AuxKind::H, n - 1).ok().as_ref() == Some(&det_h),
        );
    }
    for n in 3..=n_max {
        let ok = phi_cycle(n).ok() == Some(charpoly(&make_cycle(n)?));
        report.record("cycle formula", format!("n = {n}"), ok);
    }
    for n in 4..=n_max {
        for r in 3..n {
            let ok = phi_lollipop(n, r).ok() == Some(charpoly(&make_lollipop(n, r)?));
            report.record("lollipop formula", format!("n = {n}, r = {r}"), ok);
        }
    }

    let small: Vec<(String, Graph)> = vec![
        ("P_1".into(), make_path(1)?),
        ("P_3".into(), make_path(3)?),
        ("C_4".into(), make_cycle(4)?),
        ("C_{5,3}".into(), make_lollipop(5, 3)?),
    ];
    for (na, a) in &small {
        for (nb, b) in &small {
            if a.n() + b.n() > n_max {
                continue;
            }
            for u in 0..a.n() {
                for v in 0..b.n() {
                    report.record(
                        "join identity",
                        format!("{na}@{u} + {nb}@{v}"),
                        join_identity_holds(a, u, b, v),
                    );
                }
            }
        }
    }
    Ok(report)
}
