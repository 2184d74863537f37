//! Module theory over kS_d: actions of arbitrary permutations, orbit spans,
//! hom spaces, isomorphism tests, Kronecker products and sign twists.

use crate::{Result, SymError};
use exactfield::{Echelon, ExactMatrix};
use polyrep::symrep::permutations;
use polyrep::SymRep;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, VecDeque};

/// `ρ(σ)` for every permutation σ (lexicographic one-line order), with
/// `ρ(s_i ∘ σ) = ρ(s_i) ρ(σ)`.
pub fn all_actions(u: &SymRep) -> Vec<ExactMatrix> {
    let d = u.degree();
    let perms = permutations(d);
    let idx: HashMap<&Vec<u8>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut out: Vec<Option<ExactMatrix>> = vec![None; perms.len()];
    let id: Vec<u8> = (0..d as u8).collect();
    out[idx[&id]] = Some(ExactMatrix::identity(u.field(), u.dim()));
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        let m = out[idx[&p]].clone().unwrap();
        for i in 0..d.saturating_sub(1) {
            let q: Vec<u8> =
                p.iter().map(|&x| if x as usize == i { x + 1 } else if x as usize == i + 1 { x - 1 } else { x }).collect();
            let j = idx[&q];
            if out[j].is_none() {
                out[j] = Some(u.gen(i).mul(&m));
                queue.push_back(q);
            }
        }
    }
    out.into_iter().map(|m| m.unwrap()).collect()
}

/// The submodule generated by `vs`.
pub fn orbit_span(u: &SymRep, vs: &[Vec<u8>]) -> Echelon {
    let mut ech = Echelon::new(u.field(), u.dim());
    let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
    for v in vs {
        if ech.insert(v.clone()) {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in u.gens() {
            let w = g.mul_vec(&v);
            if ech.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    ech
}

/// Basis of `Hom_{kS_d}(U, V)`, each element a `dim V × dim U` matrix.
pub fn hom_basis(u: &SymRep, v: &SymRep) -> Result<Vec<ExactMatrix>> {
    check_compatible(u, v)?;
    let (a, b) = (u.dim(), v.dim());
    let f = u.field();
    if a == 0 || b == 0 {
        return Ok(vec![]);
    }
    // unknown X (b×a) row-major; equations X U_i − V_i X = 0
    let nvar = a * b;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for i in 0..u.degree().saturating_sub(1) {
        let (ui, vi) = (u.gen(i), v.gen(i));
        for r in 0..b {
            for c in 0..a {
                let mut eq = vec![0u8; nvar];
                for k in 0..a {
                    let x = ui.get(k, c);
                    if x != 0 {
                        eq[r * a + k] = f.add(eq[r * a + k], x);
                    }
                }
                for k in 0..b {
                    let x = vi.get(r, k);
                    if x != 0 {
                        eq[k * a + c] = f.sub(eq[k * a + c], x);
                    }
                }
                rows.push(eq);
            }
        }
    }
    let sol = if rows.is_empty() {
        (0..nvar).map(|i| exactfield::vector::unit(nvar, i)).collect()
    } else {
        ExactMatrix::from_row_vecs(f, nvar, &rows).kernel_basis()
    };
    Ok(sol.into_iter().map(|x| ExactMatrix::from_row_vecs(f, a, &x.chunks(a).map(|c| c.to_vec()).collect::<Vec<_>>())).collect())
}

pub fn sym_hom(u: &SymRep, v: &SymRep) -> Result<usize> {
    Ok(hom_basis(u, v)?.len())
}

fn check_compatible(u: &SymRep, v: &SymRep) -> Result<()> {
    if u.degree() != v.degree() {
        return Err(SymError::DegreeMismatch(u.degree(), v.degree()));
    }
    if u.field() != v.field() {
        return Err(SymError::FieldMismatch);
    }
    Ok(())
}

/// Diagonal action on `U ⊗ V`.
pub fn kronecker(u: &SymRep, v: &SymRep) -> Result<SymRep> {
    check_compatible(u, v)?;
    let gens = u.gens().iter().zip(v.gens()).map(|(a, b)| a.kron(b)).collect();
    Ok(SymRep::new(u.field(), u.degree(), u.dim() * v.dim(), gens)?)
}

/// `U ⊗ sign`.
pub fn sign_twist(u: &SymRep) -> SymRep {
    let f = u.field();
    let gens = u.gens().iter().map(|g| g.scaled(f.neg(1))).collect();
    SymRep::new(f, u.degree(), u.dim(), gens).expect("sign twist preserves the relations")
}

/// `U^* ` with `s_i ↦ ρ(s_i)^T` (the generators are involutions).
pub fn sym_dual(u: &SymRep) -> SymRep {
    let gens = u.gens().iter().map(|g| g.transpose()).collect();
    SymRep::new(u.field(), u.degree(), u.dim(), gens).expect("transpose of involutions")
}

/// `U ⊕ V`.
pub fn sym_sum(u: &SymRep, v: &SymRep) -> Result<SymRep> {
    check_compatible(u, v)?;
    let f = u.field();
    let gens = u
        .gens()
        .iter()
        .zip(v.gens())
        .map(|(a, b)| {
            let mut m = ExactMatrix::zeros(f, a.rows() + b.rows(), a.cols() + b.cols());
            m.add_block(0, 0, a);
            m.add_block(a.rows(), a.cols(), b);
            m
        })
        .collect();
    Ok(SymRep::new(f, u.degree(), u.dim() + v.dim(), gens)?)
}

/// Restriction of `U` to an invariant subspace with the given basis (rows).
pub fn sym_sub(u: &SymRep, basis: &[Vec<u8>]) -> Result<SymRep> {
    let f = u.field();
    let mut ech = Echelon::with_tracking(f, u.dim());
    for v in basis {
        if !ech.insert(v.clone()) {
            return Err(SymError::NotStable);
        }
    }
    let gens = u
        .gens()
        .iter()
        .map(|g| {
            let cols = basis
                .iter()
                .map(|v| ech.express(&g.mul_vec(v)).ok_or(SymError::NotStable))
                .collect::<Result<Vec<_>>>()?;
            Ok(ExactMatrix::from_columns(f, basis.len(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymRep::new(f, u.degree(), basis.len(), gens)?)
}

/// Is some element of `Hom(U, V)` invertible? Basis elements, then seeded
/// random combinations, then exhaustive search for small hom spaces.
pub fn sym_iso(u: &SymRep, v: &SymRep) -> Result<bool> {
    check_compatible(u, v)?;
    if u.dim() != v.dim() {
        return Ok(false);
    }
    if u.dim() == 0 {
        return Ok(true);
    }
    let basis = hom_basis(u, v)?;
    let h = basis.len();
    if h == 0 {
        return Ok(false);
    }
    if basis.iter().any(|x| x.is_invertible()) {
        return Ok(true);
    }
    let f = u.field();
    let p = f.p() as u64;
    let combine = |c: &[u8]| {
        let mut m = ExactMatrix::zeros(f, v.dim(), u.dim());
        for (x, b) in c.iter().zip(&basis) {
            if *x != 0 {
                m.add_scaled(*x, b);
            }
        }
        m
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..64 {
        let c: Vec<u8> = (0..h).map(|_| rng.random_range(0..p) as u8).collect();
        if combine(&c).is_invertible() {
            return Ok(true);
        }
    }
    match p.checked_pow(h as u32) {
        Some(t) if t <= 1 << 20 => {
            let mut c = vec![0u8; h];
            for _ in 1..t {
                for x in c.iter_mut() {
                    *x += 1;
                    if (*x as u64) < p {
                        break;
                    }
                    *x = 0;
                }
                if combine(&c).is_invertible() {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        _ => Err(SymError::Inconclusive),
    }
}
