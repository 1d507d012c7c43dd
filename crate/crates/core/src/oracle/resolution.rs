use num_traits::Zero;

use crate::abgroup::{from_presentation, snf, FgAbGroup, IntMatrix};

/// `g ⊗ h` and `Tor(g, h)` as the homology of the tensor product of free
/// resolutions `0 → Z^k → Z^(r+k) → g → 0` and likewise for `h`.
///
/// Boundary maps are matrices acting on column vectors. Degree 0 homology is
/// the cokernel of `∂1`; degree 1 homology has rank
/// `dim C1 - rank ∂1 - rank ∂2` and torsion given by the nonzero Smith
/// invariants of `∂2`.
pub fn tensor_tor_resolution(g: &FgAbGroup, h: &FgAbGroup) -> (FgAbGroup, FgAbGroup) {
    let dg = g.presentation().transpose(); // F1 -> F0
    let dh = h.presentation().transpose(); // G1 -> G0
    let (f0, f1) = (dg.rows(), dg.cols());
    let (g0, g1) = (dh.rows(), dh.cols());

    // C1 = F1⊗G0 ⊕ F0⊗G1
    let d1 = dg
        .kron(&IntMatrix::identity(g0))
        .hstack(&IntMatrix::identity(f0).kron(&dh))
        .expect("both blocks map into F0⊗G0");
    let d2 = IntMatrix::identity(f1)
        .kron(&dh)
        .scale(-1)
        .vstack(&dg.kron(&IntMatrix::identity(g1)))
        .expect("both blocks map out of F1⊗G1");
    debug_assert_eq!(d1.cols(), d2.rows());

    let h0 = from_presentation(&d1.transpose(), f0 * g0).expect("columns match C0");

    let rank = |m: &IntMatrix| snf(m).iter().filter(|d| !d.is_zero()).count();
    let c1 = d1.cols();
    let free = c1 - rank(&d1) - rank(&d2);
    let orders = snf(&d2)
        .into_iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.magnitude().clone());
    let h1 = FgAbGroup::from_orders(free, orders);
    (h0, h1)
}
