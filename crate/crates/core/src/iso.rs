//! Crystal isomorphisms between Uglov sets of orbit-equivalent charges.
//!
//! Every Uglov multipartition is `f_{i_1} ⋯ f_{i_n} ∅` for some residues.
//! Replaying the same residues under another charge of the same orbit gives
//! its image; the result does not depend on the path chosen.

use crate::charges::require_same_orbit;
use crate::crystal::{f_op, hw_reduce};
use crate::error::{Error, Result};
use crate::multipartition::{Multicharge, Multipartition};

/// The residues `(i_1, …, i_n)` with `f_{i_1} ⋯ f_{i_n} ∅ = mp`
/// (`i_n` is applied first).
pub fn extract_path(mp: &Multipartition, charge: &Multicharge) -> Result<Vec<i64>> {
    charge.check_len(mp)?;
    let (top, path) = hw_reduce(mp, charge);
    if !top.is_empty() {
        return Err(Error::NotUglov {
            mp: mp.to_string(),
            charge: charge.to_string(),
            e: charge.level(),
        });
    }
    Ok(path)
}

/// Applies `f_{i_n}` first and `f_{i_1}` last to the empty multipartition.
pub fn replay(path: &[i64], charge: &Multicharge) -> Result<Multipartition> {
    let mut mp = Multipartition::empty(charge.len());
    for (step, &i) in path.iter().enumerate().rev() {
        mp = f_op(&mp, charge, i).ok_or(Error::UndefinedStep {
            step: step + 1,
            residue: charge.residue_of(i),
        })?;
    }
    Ok(mp)
}

/// `Ψ_{from → to}`.
pub fn psi(mp: &Multipartition, from: &Multicharge, to: &Multicharge) -> Result<Multipartition> {
    require_same_orbit(from, to)?;
    let path = extract_path(mp, from)?;
    let image = replay(&path, to);
    debug_assert!(image.is_ok(), "path of {mp} does not replay under {to}");
    image
}

/// `Ψ_{v → τ.v}` in closed form: rotate the components left.
pub fn tau_shortcut(mp: &Multipartition) -> Multipartition {
    mp.rotate_left()
}
