//! Explicit integer eigenvectors for the Laplacian eigenvalue 1.
//!
//! Every constructor checks `L v = v` in integer arithmetic before returning,
//! so a returned [`WitnessVector`] is a certificate that 1 is an eigenvalue.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{make_compass, make_cycle, make_lollipop, make_path, CompassParams, Graph};
use crate::spectra::laplacian;

/// Which construction produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Period-6 pattern `1, 0, -1, -1, 0, 1` along a path.
    Path,
    /// The path pattern read around a cycle.
    CycleAlternating,
    /// Period-6 pattern `1, 1, 0, -1, -1, 0` around a cycle.
    CyclePaired,
    /// Lollipop, `r = 0 mod 6`: paired pattern on the cycle, zero tail.
    LollipopCycleBlock,
    /// Lollipop, `r = 1 mod 6`, `3 | n`: path pattern along the Hamiltonian path.
    LollipopPath,
    /// Lollipop, `r = 3 mod 6`, `n = 1 mod 3`: paired pattern on the cycle and
    /// `-2` times the shifted pattern on the tail.
    LollipopShiftedTail,
    /// Compass with `6 | r`, `r' = r/2`: paired pattern on the cycle block.
    CompassCycleBlock,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessVector {
    pub entries: Vec<i64>,
    pub eigenvalue: i64,
    pub provenance: Provenance,
}

impl WitnessVector {
    /// Verifies `L(g) v = mu v` exactly and wraps the vector.
    pub fn verified(
        g: &Graph,
        entries: Vec<i64>,
        eigenvalue: i64,
        provenance: Provenance,
    ) -> Result<Self> {
        if entries.len() != g.n() {
            return Err(Error::InternalConsistency(format!(
                "{provenance:?} witness has length {}, graph has {} vertices",
                entries.len(),
                g.n()
            )));
        }
        if entries.iter().all(|&e| e == 0) {
            return Err(Error::InternalConsistency(format!(
                "{provenance:?} witness is zero"
            )));
        }
        let image = laplacian(g).mul_vec(&entries);
        if let Some(i) = (0..g.n()).find(|&i| image[i] != eigenvalue * entries[i]) {
            return Err(Error::InternalConsistency(format!(
                "{provenance:?} witness fails at vertex {i}: (Lv)_i = {}, expected {}",
                image[i],
                eigenvalue * entries[i]
            )));
        }
        Ok(WitnessVector {
            entries,
            eigenvalue,
            provenance,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when neither vector is a rational multiple of the other.
    pub fn independent_of(&self, other: &WitnessVector) -> bool {
        let (a, b) = (&self.entries, &other.entries);
        a.len() == b.len()
            && (0..a.len()).any(|i| (i + 1..a.len()).any(|j| a[i] * b[j] != a[j] * b[i]))
    }
}

/// Entry `k` (0-based) of the path pattern.
fn path_pattern(k: usize) -> i64 {
    [1, 0, -1, -1, 0, 1][k % 6]
}

/// Entry `k` (0-based) of the paired cycle pattern.
fn paired_pattern(k: usize) -> i64 {
    [1, 1, 0, -1, -1, 0][k % 6]
}

pub fn path_one_vector(n: usize) -> Result<WitnessVector> {
    if n == 0 || n % 3 != 0 {
        return Err(Error::invalid(format!("path witness needs 3 | n, got {n}")));
    }
    let entries = (0..n).map(path_pattern).collect();
    WitnessVector::verified(&make_path(n)?, entries, 1, Provenance::Path)
}

pub fn cycle_one_vectors(n: usize) -> Result<(WitnessVector, WitnessVector)> {
    if n == 0 || n % 6 != 0 {
        return Err(Error::invalid(format!(
            "cycle witnesses need 6 | n, got {n}"
        )));
    }
    let g = make_cycle(n)?;
    let x = WitnessVector::verified(
        &g,
        (0..n).map(path_pattern).collect(),
        1,
        Provenance::CycleAlternating,
    )?;
    let y = WitnessVector::verified(
        &g,
        (0..n).map(paired_pattern).collect(),
        1,
        Provenance::CyclePaired,
    )?;
    if !x.independent_of(&y) {
        return Err(Error::InternalConsistency(format!(
            "cycle witnesses on C_{n} are dependent"
        )));
    }
    Ok((x, y))
}

/// Eigenvalue-1 witness for `C_{n,r}` in the three residue cases that admit
/// one; `Ok(None)` elsewhere.
pub fn lollipop_one_witness(n: usize, r: usize) -> Result<Option<WitnessVector>> {
    if r < 3 || r >= n {
        return Err(Error::invalid(format!(
            "lollipop witness needs 3 <= r < n, got n = {n}, r = {r}"
        )));
    }
    let (entries, provenance): (Vec<i64>, _) = match (r % 6, n % 3) {
        (0, _) => (
            (0..n)
                .map(|i| if i < r { paired_pattern(i) } else { 0 })
                .collect(),
            Provenance::LollipopCycleBlock,
        ),
        (1, 0) => ((0..n).map(path_pattern).collect(), Provenance::LollipopPath),
        (3, 1) => (
            (0..n)
                .map(|i| {
                    if i < r {
                        paired_pattern(i)
                    } else {
                        -2 * paired_pattern(i - r)
                    }
                })
                .collect(),
            Provenance::LollipopShiftedTail,
        ),
        _ => return Ok(None),
    };
    WitnessVector::verified(&make_lollipop(n, r)?, entries, 1, provenance).map(Some)
}

/// Eigenvalue-1 witness for a compass with `6 | r` and `r' = r/2`;
/// `Ok(None)` otherwise.
pub fn compass_one_witness(p: CompassParams) -> Result<Option<WitnessVector>> {
    p.validate()?;
    if p.r % 6 != 0 || 2 * p.r_prime != p.r {
        return Ok(None);
    }
    let block = p.t..p.t + p.r;
    let entries = (0..p.n)
        .map(|i| {
            if block.contains(&i) {
                paired_pattern(i - p.t)
            } else {
                0
            }
        })
        .collect();
    WitnessVector::verified(&make_compass(p)?, entries, 1, Provenance::CompassCycleBlock).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::integer;
    use crate::spectra::multiplicity;

    /// `(L v)_i = deg(i) v_i - sum of neighbours`, straight from adjacency.
    fn is_fixed(g: &Graph, v: &[i64]) -> bool {
        (0..g.n()).all(|i| {
            let nb: i64 = g.neighbors(i).iter().map(|&j| v[j]).sum();
            g.degree(i) as i64 * v[i] - nb == v[i]
        })
    }

    #[test]
    fn path_vectors() {
        assert_eq!(path_one_vector(3).unwrap().entries, vec![1, 0, -1]);
        assert_eq!(
            path_one_vector(6).unwrap().entries,
            vec![1, 0, -1, -1, 0, 1]
        );
        assert!(matches!(
            path_one_vector(4),
            Err(Error::InvalidParameter(_))
        ));
        assert!(path_one_vector(0).is_err());
        for n in (3..=60).step_by(3) {
            let w = path_one_vector(n).unwrap();
            assert!(is_fixed(&make_path(n).unwrap(), &w.entries));
        }
    }

    #[test]
    fn cycle_vectors() {
        let (x, y) = cycle_one_vectors(6).unwrap();
        assert_eq!(x.entries, vec![1, 0, -1, -1, 0, 1]);
        assert_eq!(y.entries, vec![1, 1, 0, -1, -1, 0]);
        let (x, y) = cycle_one_vectors(12).unwrap();
        assert!(x.independent_of(&y));
        assert!(is_fixed(&make_cycle(12).unwrap(), &x.entries));
        assert!(is_fixed(&make_cycle(12).unwrap(), &y.entries));
        assert!(cycle_one_vectors(9).is_err());
    }

    #[test]
    fn lollipop_examples() {
        let w = lollipop_one_witness(7, 3).unwrap().unwrap();
        assert_eq!(w.entries, vec![1, 1, 0, -2, -2, 0, 2]);
        assert_eq!(w.provenance, Provenance::LollipopShiftedTail);

        let z = lollipop_one_witness(9, 6).unwrap().unwrap();
        assert!(z.entries[6..].iter().all(|&e| e == 0));
        assert_eq!(multiplicity(&make_lollipop(9, 6).unwrap(), &integer(1)), 2);

        let x = lollipop_one_witness(9, 7).unwrap().unwrap();
        assert_eq!(x.provenance, Provenance::LollipopPath);
        assert_eq!(multiplicity(&make_lollipop(9, 7).unwrap(), &integer(1)), 1);

        assert!(lollipop_one_witness(8, 3).unwrap().is_none());
        assert!(lollipop_one_witness(5, 5).is_err());
    }

    #[test]
    fn lollipop_witnesses_and_multiplicities() {
        for n in 4..=40 {
            for r in 3..n {
                let g = make_lollipop(n, r).unwrap();
                let m = multiplicity(&g, &integer(1));
                match lollipop_one_witness(n, r).unwrap() {
                    Some(w) => {
                        assert!(is_fixed(&g, &w.entries), "({n}, {r})");
                        let want = if r % 6 == 0 && n % 3 == 0 { 2 } else { 1 };
                        assert_eq!(m, want, "({n}, {r})");
                    }
                    None => assert!(!matches!((r % 6, n % 3), (0, _) | (1, 0) | (3, 1))),
                }
            }
        }
    }

    #[test]
    fn compass_examples() {
        let p = CompassParams::new(12, 6, 3, 1).unwrap();
        let w = compass_one_witness(p).unwrap().unwrap();
        let g = make_compass(p).unwrap();
        assert!(is_fixed(&g, &w.entries));
        assert!(multiplicity(&g, &integer(1)) >= 1);
        assert!(
            compass_one_witness(CompassParams::new(14, 8, 4, 3).unwrap())
                .unwrap()
                .is_none()
        );
        assert!(
            compass_one_witness(CompassParams::new(13, 6, 2, 1).unwrap())
                .unwrap()
                .is_none()
        );
        let bad = CompassParams {
            n: 6,
            r: 6,
            r_prime: 3,
            t: 1,
        };
        assert!(compass_one_witness(bad).is_err());
    }

    #[test]
    fn every_compass_witness_verifies() {
        for n in 8..=30 {
            for p in CompassParams::all_with_n(n) {
                if let Some(w) = compass_one_witness(p).unwrap() {
                    assert!(is_fixed(&make_compass(p).unwrap(), &w.entries));
                }
            }
        }
    }

    #[test]
    fn verification_rejects_wrong_vectors() {
        let g = make_path(3).unwrap();
        assert!(WitnessVector::verified(&g, vec![1, 1, 1], 1, Provenance::Path).is_err());
        assert!(WitnessVector::verified(&g, vec![0, 0, 0], 1, Provenance::Path).is_err());
        assert!(WitnessVector::verified(&g, vec![1, 0], 1, Provenance::Path).is_err());
        assert!(WitnessVector::verified(&g, vec![1, 1, 1], 0, Provenance::Path).is_ok());
    }
}
