//! Size caps for the exponential searches.
//!
//! Caps are process-wide. The defaults can be overridden programmatically
//! with [`Caps::install`] or from a string of the form `name=value,...`
//! (the CLI reads it from `ACL_LAB_CAPS`).

use std::sync::RwLock;

use crate::error::{Error, Result};

/// Environment variable consulted by [`Caps::from_env`].
pub const CAPS_ENV: &str = "ACL_LAB_CAPS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum order accepted by canonical coding.
    pub canon: usize,
    /// Maximum order accepted by homomorphic image enumeration.
    pub hom: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { canon: 12, hom: 10 }
    }
}

static CURRENT: RwLock<Caps> = RwLock::new(Caps { canon: 12, hom: 10 });

impl Caps {
    pub fn current() -> Caps {
        *CURRENT.read().unwrap_or_else(|e| e.into_inner())
    }

    pub fn install(caps: Caps) {
        *CURRENT.write().unwrap_or_else(|e| e.into_inner()) = caps;
    }

    /// Parses `name=value,...` on top of the defaults.
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("cap entry `{item}` lacks `=`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("cap `{name}` has non-numeric value")))?;
            match name.trim() {
                "canon" => caps.canon = value,
                "hom" => caps.hom = value,
                other => return Err(Error::InvalidParameter(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }

    pub fn from_env() -> Result<Caps> {
        match std::env::var(CAPS_ENV) {
            Ok(s) => Caps::parse(&s),
            Err(_) => Ok(Caps::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let c = Caps::parse("hom=8, canon=11").unwrap();
        assert_eq!(c, Caps { canon: 11, hom: 8 });
        assert_eq!(Caps::parse("").unwrap(), Caps::default());
        assert!(Caps::parse("foo=1").is_err());
        assert!(Caps::parse("hom").is_err());
        assert!(Caps::parse("hom=x").is_err());
    }
}
