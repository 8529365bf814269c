//! Hu's map, the `ι_k` embedding and the restriction data for Hecke
//! algebras of type `G(l, l, n)`.
//!
//! All maps here assume `l | e` and a charge in the orbit of the canonical
//! charge `(0, e/l, …, (l-1)e/l)`. At the canonical charge each map has a
//! closed form on components; elsewhere it is conjugated by `Ψ`. Both the
//! closed form and the path-replay definition are implemented, and debug
//! builds check that they agree on every call.

use crate::charges::require_same_orbit;
use crate::crystal::f_op;
use crate::error::{Error, Result};
use crate::iso::{extract_path, psi, replay};
use crate::multipartition::{Multicharge, Multipartition};

/// `(0, e/l, 2e/l, …, (l-1)e/l)` at level `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCharge {
    l: usize,
    charge: Multicharge,
}

impl CanonicalCharge {
    pub fn new(l: usize, e: i64) -> Result<Self> {
        if l == 0 || e % l as i64 != 0 {
            return Err(Error::Divisibility(format!("l = {l} must divide e = {e}")));
        }
        let step = e / l as i64;
        let charge = Multicharge::new((0..l as i64).map(|k| k * step).collect(), e)?;
        Ok(Self { l, charge })
    }

    /// The canonical charge for `charge`'s length and level, provided the
    /// two are in the same orbit.
    pub fn for_charge(charge: &Multicharge) -> Result<Self> {
        let canonical = Self::new(charge.len(), charge.level())?;
        require_same_orbit(charge, &canonical.charge)?;
        Ok(canonical)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn e(&self) -> i64 {
        self.charge.level()
    }

    /// `e / l`.
    pub fn step(&self) -> i64 {
        self.e() / self.l as i64
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }
}

fn require_uglov(mp: &Multipartition, charge: &Multicharge) -> Result<Vec<i64>> {
    extract_path(mp, charge)
}

/// Hu's map through the canonical charge: `Ψ`, cyclic shift
/// `(λ^l, λ^1, …, λ^{l-1})`, `Ψ` back.
pub fn hu_map_conjugation(mp: &Multipartition, charge: &Multicharge) -> Result<Multipartition> {
    let canonical = CanonicalCharge::for_charge(charge)?;
    let at_canonical = psi(mp, charge, canonical.charge())?;
    psi(&at_canonical.rotate_right(), canonical.charge(), charge)
}

/// Hu's map by definition: replay `mp`'s path with every residue
/// raised by `e/l`.
pub fn hu_map_replay(mp: &Multipartition, charge: &Multicharge) -> Result<Multipartition> {
    let canonical = CanonicalCharge::for_charge(charge)?;
    let shifted: Vec<i64> = require_uglov(mp, charge)?
        .into_iter()
        .map(|i| i + canonical.step())
        .collect();
    replay(&shifted, charge)
}

/// The bijection of `Φ_{e,s}(n)` obtained by shifting all path residues
/// by `e/l`.
pub fn hu_map(mp: &Multipartition, charge: &Multicharge) -> Result<Multipartition> {
    let image = hu_map_conjugation(mp, charge)?;
    debug_assert_eq!(Ok(&image), hu_map_replay(mp, charge).as_ref());
    Ok(image)
}

/// The level-`ke/l` charge `(0, e/l, …, (k-1)e/l)` that `ι_k` starts from.
pub fn iota_source_charge(k: usize, l: usize, e: i64) -> Result<Multicharge> {
    check_iota_divisibility(k, l, e)?;
    let step = e / l as i64;
    Multicharge::new((0..k as i64).map(|j| j * step).collect(), step * k as i64)
}

fn check_iota_divisibility(k: usize, l: usize, e: i64) -> Result<()> {
    if k == 0 || !l.is_multiple_of(k) {
        return Err(Error::Divisibility(format!("k = {k} must divide l = {l}")));
    }
    if e % l as i64 != 0 {
        return Err(Error::Divisibility(format!("l = {l} must divide e = {e}")));
    }
    Ok(())
}

/// Repeats `(λ^1, …, λ^k)` until there are `l` components.
fn repeat_components(mp: &Multipartition, l: usize) -> Multipartition {
    let comps = mp.components();
    Multipartition::new(comps.iter().cycle().take(l).cloned().collect()).unwrap()
}

fn iota_inputs(
    mp: &Multipartition,
    k: usize,
    charge: &Multicharge,
) -> Result<(CanonicalCharge, Multicharge)> {
    let canonical = CanonicalCharge::for_charge(charge)?;
    let source = iota_source_charge(k, charge.len(), charge.level())?;
    if mp.level() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            found: mp.level(),
        });
    }
    Ok((canonical, source))
}

/// `ι_k` through the canonical charge: repeat the components `l/k` times,
/// then apply `Ψ` to `charge`.
pub fn iota_conjugation(
    mp: &Multipartition,
    k: usize,
    charge: &Multicharge,
) -> Result<Multipartition> {
    let (canonical, source) = iota_inputs(mp, k, charge)?;
    require_uglov(mp, &source)?;
    psi(
        &repeat_components(mp, charge.len()),
        canonical.charge(),
        charge,
    )
}

/// `ι_k` by definition: every residue `i` of `mp`'s level-`ke/l` path
/// becomes the block `f_i f_{i+ke/l} ⋯ f_{i+e-ke/l}` at level `e`,
/// the rightmost operator applied first.
pub fn iota_replay(mp: &Multipartition, k: usize, charge: &Multicharge) -> Result<Multipartition> {
    let (_, source) = iota_inputs(mp, k, charge)?;
    let path = require_uglov(mp, &source)?;
    let small = source.level();
    let blocks = charge.len() / k;
    let mut out = Multipartition::empty(charge.len());
    for (step, &i) in path.iter().enumerate().rev() {
        for t in 1..=blocks as i64 {
            let residue = i + charge.level() - t * small;
            out = f_op(&out, charge, residue).ok_or(Error::UndefinedStep {
                step: step + 1,
                residue: charge.residue_of(residue),
            })?;
        }
    }
    Ok(out)
}

/// `ι_k^s : Φ_{ke/l, v}(n) → Φ_{e, s}(ln/k)`.
pub fn iota(mp: &Multipartition, k: usize, charge: &Multicharge) -> Result<Multipartition> {
    let image = iota_conjugation(mp, k, charge)?;
    debug_assert_eq!(Ok(&image), iota_replay(mp, k, charge).as_ref());
    Ok(image)
}

/// Size of the orbit of `mp` under cyclic rotation of its components.
pub fn rotation_orbit_size(mp: &Multipartition) -> usize {
    let comps = mp.components();
    let l = comps.len();
    (1..=l)
        .find(|&p| l.is_multiple_of(p) && (0..l).all(|c| comps[c] == comps[(c + p) % l]))
        .unwrap()
}

/// `r(λ)`: `l` divided by the rotation orbit size. Always divides `l`.
pub fn r_value(mp: &Multipartition) -> usize {
    mp.level() / rotation_orbit_size(mp)
}

/// Number of simple summands of the restricted simple module labelled by
/// `mp`: `r` of its image at the canonical charge.
pub fn split_count(mp: &Multipartition, charge: &Multicharge) -> Result<usize> {
    let canonical = CanonicalCharge::for_charge(charge)?;
    Ok(r_value(&psi(mp, charge, canonical.charge())?))
}

/// Whether `mp` lies in the image of `ι_k`: its canonical image repeats
/// with period `k`.
pub fn is_in_iota_image(mp: &Multipartition, k: usize, charge: &Multicharge) -> Result<bool> {
    check_iota_divisibility(k, charge.len(), charge.level())?;
    let canonical = CanonicalCharge::for_charge(charge)?;
    let image = psi(mp, charge, canonical.charge())?;
    let comps = image.components();
    Ok((k..comps.len()).all(|c| comps[c] == comps[c - k]))
}

/// The charge `(0, e/2 + Ne)` that divided bipartitions are labelled by.
pub fn divided_charge(n: i64, e: i64) -> Result<Multicharge> {
    check_divided(n, e)?;
    Multicharge::new(vec![0, e / 2 + n * e], e)
}

fn check_divided(n: i64, e: i64) -> Result<()> {
    if e % 2 != 0 {
        return Err(Error::Divisibility(format!("e = {e} must be even")));
    }
    if n < 0 {
        return Err(Error::NotApplicable(format!("N = {n} must be nonnegative")));
    }
    Ok(())
}

/// `Ψ_{(0, e/2+Ne) → (Ne, e/2)}(λ^1, λ^2) = (λ^2, λ^1)`.
pub fn is_divided_bipartition(mp: &Multipartition, n: i64, e: i64) -> Result<bool> {
    let from = divided_charge(n, e)?;
    from.check_len(mp)?;
    let to = Multicharge::new(vec![n * e, e / 2], e)?;
    Ok(psi(mp, &from, &to)? == mp.rotate_left())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::uglov_set;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn charge(s: &str, e: i64) -> Multicharge {
        Multicharge::parse(s, e).unwrap()
    }

    #[test]
    fn canonical_charge() {
        assert_eq!(
            CanonicalCharge::new(4, 4).unwrap().charge(),
            &charge("0,1,2,3", 4)
        );
        assert_eq!(
            CanonicalCharge::new(2, 6).unwrap().charge(),
            &charge("0,3", 6)
        );
        assert_eq!(
            CanonicalCharge::new(1, 3).unwrap().charge(),
            &charge("0", 3)
        );
        assert!(CanonicalCharge::new(3, 4).is_err());
        assert!(CanonicalCharge::for_charge(&charge("0,1", 4)).is_err());
    }

    #[test]
    fn hu_examples() {
        let s = charge("0,10", 4);
        assert_eq!(hu_map(&mp("1.1|5.1"), &s), Ok(mp("4|3.1")));
        assert_eq!(hu_map_replay(&mp("1.1|5.1"), &s), Ok(mp("4|3.1")));
        assert_eq!(hu_map(&mp("-|-"), &s), Ok(mp("-|-")));
        let c = charge("0,2", 4);
        for lam in uglov_set(&c, 5) {
            assert_eq!(hu_map(&lam, &c), Ok(lam.rotate_right()));
        }
        assert!(matches!(
            hu_map(&mp("-|-"), &charge("0,1", 4)),
            Err(Error::OrbitMismatch { .. })
        ));
        assert!(matches!(
            hu_map(&mp("-|-"), &charge("0,1", 3)),
            Err(Error::Divisibility(_))
        ));
    }

    #[test]
    fn iota_examples() {
        let p = mp("4.3.1");
        assert_eq!(iota(&p, 1, &charge("0,2", 4)), Ok(mp("4.3.1|4.3.1")));
        assert_eq!(iota(&p, 1, &charge("0,22", 4)), Ok(mp("3.2.1|4.3.2.1")));
        assert_eq!(
            iota_replay(&p, 1, &charge("0,22", 4)),
            Ok(mp("3.2.1|4.3.2.1"))
        );
        let c = charge("0,2", 4);
        for lam in uglov_set(&c, 4) {
            assert_eq!(iota(&lam, 2, &c), Ok(lam.clone()));
        }
        assert!(matches!(
            iota(&mp("2.2"), 1, &c),
            Err(Error::NotUglov { .. })
        ));
        // Level ke/l = 1 has no crystal to start from.
        assert!(iota(&p, 1, &charge("0,1,2", 3)).is_err());
        assert!(matches!(
            iota(&mp("1|1"), 1, &c),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_value(&mp("3.1|2|3.1|2")), 2);
        assert_eq!(r_value(&mp("-|-|-")), 3);
        assert_eq!(r_value(&mp("1|2")), 1);
        assert_eq!(r_value(&mp("1|1|1|1|1|1")), 6);
        assert_eq!(r_value(&mp("1|-|1|-|1|-")), 3);
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            split_count(&mp("3.1|2|3.1|2"), &charge("0,1,2,3", 4)),
            Ok(2)
        );
        assert_eq!(
            split_count(&mp("2.1|1|3.2|2.1"), &charge("0,13,26,39", 4)),
            Ok(2)
        );
        assert_eq!(split_count(&mp("-|-|-|-"), &charge("0,13,26,39", 4)), Ok(4));
    }

    #[test]
    fn iota_image_examples() {
        let s = charge("0,1,2,3", 4);
        assert_eq!(is_in_iota_image(&mp("3.1|2|3.1|2"), 2, &s), Ok(true));
        assert_eq!(is_in_iota_image(&mp("3.1|2|3.1|2"), 1, &s), Ok(false));
        assert_eq!(is_in_iota_image(&mp("3.1|2|3.1|2"), 4, &s), Ok(true));
        assert_eq!(
            is_in_iota_image(&mp("4.3.1|4.3.1"), 1, &charge("0,2", 4)),
            Ok(true)
        );
        assert!(is_in_iota_image(&mp("3.1|2|3.1|2"), 3, &s).is_err());
    }

    #[test]
    fn divided_examples() {
        assert_eq!(is_divided_bipartition(&mp("2.1|2.1"), 0, 4), Ok(true));
        assert!(matches!(
            is_divided_bipartition(&mp("2.2|2.2"), 0, 4),
            Err(Error::NotUglov { .. })
        ));
        for n in 0..3 {
            assert_eq!(is_divided_bipartition(&mp("1|-"), n, 4), Ok(false));
        }
        assert!(matches!(
            is_divided_bipartition(&mp("1|-"), 0, 5),
            Err(Error::Divisibility(_))
        ));
        assert!(is_divided_bipartition(&mp("1|-"), -1, 4).is_err());
    }
}
