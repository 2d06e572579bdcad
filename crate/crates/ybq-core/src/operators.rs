//! Distinguished structural operators: the graded flip P, the odd reflection
//! J, the parity involution eta, and membership in the queer subalgebra q(N).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::op::GradedOp;
use crate::space::Superspace;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Graded flip on two legs: P (v (x) w) = (-1)^(p_v p_w) w (x) v.
pub fn flip(sp: Superspace) -> GradedOp {
    let mut p = GradedOp::zero(sp, 2).expect("two legs always addressable");
    for k in sp.basis() {
        for l in sp.basis() {
            let sign = if sp.parity(k).unwrap() & sp.parity(l).unwrap() == 1 {
                -1.0
            } else {
                1.0
            };
            p.add_term(&[l, k], &[k, l], Complex64::new(sign, 0.0))
                .expect("indices from basis are valid");
        }
    }
    p
}

/// The same operator built from its defining sum
/// P = sum_{i,j} (-1)^(p_j) e_{ij} (x) e_{ji}.
pub fn superpermutation(sp: Superspace) -> Result<GradedOp> {
    let mut p = GradedOp::zero(sp, 2)?;
    for i in sp.basis() {
        for j in sp.basis() {
            let sign = if sp.parity(j)? == 1 { -1.0 } else { 1.0 };
            let term = GradedOp::matrix_unit(sp, i, j)?
                .graded_tensor(&GradedOp::matrix_unit(sp, j, i)?)?;
            p.add_scaled(&term, Complex64::new(sign, 0.0))?;
        }
    }
    Ok(p)
}

/// J = sum_i (-1)^(p_i) e_{i,-i}; squares to -Id and anticommutes with itself
/// across legs.
pub fn j_op(sp: Superspace) -> GradedOp {
    let mut j = GradedOp::zero(sp, 1).expect("one leg always addressable");
    for i in sp.basis() {
        let sign = if sp.parity(i).unwrap() == 1 { -1.0 } else { 1.0 };
        j.add_term(&[i], &[-i], Complex64::new(sign, 0.0))
            .expect("indices from basis are valid");
    }
    j
}

/// J acting on one leg of a `total`-leg space.
pub fn j_on_leg(sp: Superspace, total: u32, leg: u32) -> Result<GradedOp> {
    j_op(sp).embed(&[leg], total)
}

/// J1 J2 P on two legs, the reflected companion of the flip.
pub fn j_pair_flip(sp: Superspace) -> Result<GradedOp> {
    let j1 = j_on_leg(sp, 2, 1)?;
    let j2 = j_on_leg(sp, 2, 2)?;
    j1.compose(&j2)?.compose(&flip(sp))
}

/// Spanning set of q(N) inside End(C^(N|N)): the 2N^2 operators
/// e_{ab} + e_{-a,-b} and e_{a,-b} + e_{-a,b} for a, b in 1..=N.
pub fn qn_basis(sp: Superspace) -> Result<Vec<GradedOp>> {
    let n = sp.half_dim() as i32;
    let mut out = Vec::with_capacity(2 * (n as usize) * (n as usize));
    for a in 1..=n {
        for b in 1..=n {
            let mut even = GradedOp::zero(sp, 1)?;
            even.add_term(&[a], &[b], one())?;
            even.add_term(&[-a], &[-b], one())?;
            out.push(even);
            let mut odd = GradedOp::zero(sp, 1)?;
            odd.add_term(&[a], &[-b], one())?;
            odd.add_term(&[-a], &[b], one())?;
            out.push(odd);
        }
    }
    Ok(out)
}

/// Membership test for q(N), the centralizer of the odd reflection: the
/// entries must be invariant under flipping the sign of both indices. For a
/// parity-homogeneous A this is the graded commutation condition
/// A J = (-1)^(deg A) J A.
pub fn is_in_qn(a: &GradedOp) -> Result<bool> {
    if a.legs() != 1 {
        return Err(Error::LegMismatch {
            expected: 1,
            found: a.legs(),
        });
    }
    let reflected = a.eta_on_leg(1)?;
    Ok(crate::op::max_abs_diff(a, &reflected)? <= 1e-12 * a.max_abs().max(1.0))
}

/// Applies eta on leg 2 of a two-leg operator; for the flip this coincides
/// with J1 J2 P.
pub fn eta_second_leg(x: &GradedOp) -> Result<GradedOp> {
    x.eta_on_leg(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op::{commutator, max_abs_diff};

    fn sp(n: u32) -> Superspace {
        Superspace::new(n).unwrap()
    }

    #[test]
    fn flip_equals_defining_sum() {
        for n in 1..=3 {
            let s = sp(n);
            let d = max_abs_diff(&flip(s), &superpermutation(s).unwrap()).unwrap();
            assert_eq!(d, 0.0, "N={n}");
        }
    }

    #[test]
    fn flip_squares_to_identity() {
        for n in 1..=3 {
            let s = sp(n);
            let p = flip(s);
            let id = GradedOp::identity(s, 2).unwrap();
            assert_eq!(max_abs_diff(&p.compose(&p).unwrap(), &id).unwrap(), 0.0);
        }
    }

    #[test]
    fn flip_braid_relations() {
        for n in 1..=2 {
            let s = sp(n);
            let p = flip(s);
            let p12 = p.embed(&[1, 2], 3).unwrap();
            let p23 = p.embed(&[2, 3], 3).unwrap();
            let p13 = p.embed(&[1, 3], 3).unwrap();
            let lhs = p12.compose(&p23).unwrap();
            assert_eq!(max_abs_diff(&lhs, &p13.compose(&p12).unwrap()).unwrap(), 0.0);
            assert_eq!(max_abs_diff(&lhs, &p23.compose(&p13).unwrap()).unwrap(), 0.0);
        }
    }

    #[test]
    fn j_squares_to_minus_identity() {
        for n in 1..=3 {
            let s = sp(n);
            let j = j_op(s);
            let mut jj = j.compose(&j).unwrap();
            jj.add_scaled(&GradedOp::identity(s, 1).unwrap(), Complex64::new(1.0, 0.0))
                .unwrap();
            assert_eq!(jj.max_abs(), 0.0, "N={n}");
        }
    }

    #[test]
    fn j_legs_anticommute() {
        for n in 1..=3 {
            let s = sp(n);
            let j1 = j_on_leg(s, 2, 1).unwrap();
            let j2 = j_on_leg(s, 2, 2).unwrap();
            let mut anti = j1.compose(&j2).unwrap();
            anti.add_scaled(&j2.compose(&j1).unwrap(), Complex64::new(1.0, 0.0))
                .unwrap();
            assert_eq!(anti.max_abs(), 0.0, "N={n}");
        }
    }

    #[test]
    fn j_action_frozen_n2() {
        // J e_c = (-1)^(p_{-c}) e_{-c}: column c = +1 holds -1 at row -1,
        // column -1 holds +1 at row +1.
        let s = sp(2);
        let j = j_op(s);
        assert_eq!(j.get(&[-1], &[1]).unwrap(), Complex64::new(-1.0, 0.0));
        assert_eq!(j.get(&[1], &[-1]).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(j.nnz(), 4);
    }

    #[test]
    fn eta_on_flip_is_j_pair_flip() {
        for n in 1..=3 {
            let s = sp(n);
            let lhs = eta_second_leg(&flip(s)).unwrap();
            let rhs = j_pair_flip(s).unwrap();
            assert_eq!(max_abs_diff(&lhs, &rhs).unwrap(), 0.0, "N={n}");
        }
    }

    #[test]
    fn qn_membership() {
        let s = sp(2);
        let basis = qn_basis(s).unwrap();
        assert_eq!(basis.len(), 8);
        let j = j_op(s);
        for b in &basis {
            assert!(is_in_qn(b).unwrap());
            // graded commutation, independently of the reflection route:
            // even elements commute with J, odd ones anticommute
            let bj = b.compose(&j).unwrap();
            let jb = j.compose(b).unwrap();
            let comm = max_abs_diff(&bj, &jb).unwrap();
            let mut sum = bj.clone();
            sum.add_scaled(&jb, one()).unwrap();
            assert!(
                comm < 1e-15 || sum.max_abs() < 1e-15,
                "neither commutes nor anticommutes with J"
            );
        }
        // frozen counterexample: |[e_{12}, J]| = 1
        let e12 = GradedOp::matrix_unit(s, 1, 2).unwrap();
        assert!(!is_in_qn(&e12).unwrap());
        let comm = commutator(&e12, &j_op(s)).unwrap();
        assert_eq!(comm.max_abs(), 1.0);
    }

    #[test]
    fn permuted_embedding_matches_flip_conjugation() {
        // embed(X, [2,1]) must equal P X P, and embed(X, [1,3], 3) must equal
        // P23 (X (x) Id) P23; both pin the signed permutation route against
        // the explicit flip-conjugation route.
        let s = sp(2);
        let x = flip(s)
            .compose(&j_pair_flip(s).unwrap().scaled(Complex64::new(0.5, 1.0)))
            .unwrap();
        let p = flip(s);
        let via_perm = x.permute_legs(&[2, 1]).unwrap();
        let via_conj = p.compose(&x).unwrap().compose(&p).unwrap();
        assert!(max_abs_diff(&via_perm, &via_conj).unwrap() < 1e-15);

        let id1 = GradedOp::identity(s, 1).unwrap();
        let wide = x.graded_tensor(&id1).unwrap();
        // P23 assembled by plain tensor so this route never calls permute_legs
        let p23 = id1.graded_tensor(&p).unwrap();
        let via_emb = x.embed(&[1, 3], 3).unwrap();
        let via_conj3 = p23.compose(&wide).unwrap().compose(&p23).unwrap();
        assert!(max_abs_diff(&via_emb, &via_conj3).unwrap() < 1e-15);
    }

    #[test]
    fn reversed_embedding_is_swap_then_embed() {
        let s = sp(2);
        let x = j_pair_flip(s).unwrap();
        let a = x.embed(&[3, 2], 3).unwrap();
        let b = x.swap_legs().unwrap().embed(&[2, 3], 3).unwrap();
        assert_eq!(max_abs_diff(&a, &b).unwrap(), 0.0);
    }
}
