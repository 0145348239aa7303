use serde::Serialize;

use crate::closure::ConstraintSet;
use crate::error::Result;
use crate::hom::{is_hom_closed, HomWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    UniversalExistsAclTrivial,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    /// Machine-readable rule name.
    pub rule: &'static str,
    pub base_hom_closed: bool,
    /// Present when an extension set was supplied.
    pub extension_hom_closed: Option<bool>,
    /// First failing image, if any hom-closure test failed.
    pub witness: Option<HomWitness>,
    pub witness_in: Option<&'static str>,
}

/// Hom-closed constraint sets have trivial algebraic closure, so a
/// universal graph exists. With an extension set `hom_part`, a hom-closed
/// extension leaves algebraic closure unchanged, so the combined verdict is
/// decided by the base set: positive when it is hom-closed, otherwise
/// conditional on categoricity of the base theory, which is not decided here.
pub fn homclosure_verdict(cs: &ConstraintSet, hom_part: Option<&ConstraintSet>) -> Result<Verdict> {
    let base = is_hom_closed(cs.members())?;
    let Some(ext) = hom_part else {
        return Ok(Verdict {
            status: if base.closed {
                VerdictStatus::UniversalExistsAclTrivial
            } else {
                VerdictStatus::Inconclusive
            },
            rule: if base.closed { "hom-closed" } else { "not-hom-closed" },
            base_hom_closed: base.closed,
            extension_hom_closed: None,
            witness_in: base.witness.as_ref().map(|_| "base"),
            witness: base.witness,
        });
    };
    let ext_closed = is_hom_closed(ext.members())?;
    let (status, rule) = match (ext_closed.closed, base.closed) {
        (true, true) => (VerdictStatus::UniversalExistsAclTrivial, "hom-closed-extension-of-hom-closed-base"),
        (true, false) => (VerdictStatus::Inconclusive, "hom-closed-extension-conditional-on-base"),
        (false, _) => (VerdictStatus::Inconclusive, "extension-not-hom-closed"),
    };
    let (witness, witness_in) = match (ext_closed.witness, base.witness) {
        (Some(w), _) => (Some(w), Some("extension")),
        (None, Some(w)) => (Some(w), Some("base")),
        (None, None) => (None, None),
    };
    Ok(Verdict {
        status,
        rule,
        base_hom_closed: base.closed,
        extension_hom_closed: Some(ext_closed.closed),
        witness,
        witness_in,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::wheel;
    use crate::standard::{complete, cycle};

    #[test]
    fn verdicts() {
        let odd = ConstraintSet::new(vec![complete(3), cycle(5).unwrap()]).unwrap();
        assert_eq!(homclosure_verdict(&odd, None).unwrap().status, VerdictStatus::UniversalExistsAclTrivial);
        let c5 = ConstraintSet::single(cycle(5).unwrap()).unwrap();
        let v = homclosure_verdict(&c5, None).unwrap();
        assert_eq!(v.status, VerdictStatus::Inconclusive);
        assert_eq!(v.witness.unwrap().image.order(), 3);
        let wheels = ConstraintSet::new(vec![wheel(1).unwrap(), wheel(2).unwrap()]).unwrap();
        let k3 = ConstraintSet::single(complete(3)).unwrap();
        let w = homclosure_verdict(&k3, Some(&wheels)).unwrap();
        assert_eq!(w.extension_hom_closed, Some(true));
        let cond = homclosure_verdict(&c5, Some(&wheels)).unwrap();
        assert_eq!(cond.rule, "hom-closed-extension-conditional-on-base");
    }
}
