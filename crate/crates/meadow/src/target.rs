use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use meadow_core::equivalence::{cc_partition, cc_partition_unchecked, EquivalencePartition};
use meadow_core::meadow::FcmFinite;
use meadow_core::ModRing;

/// A Σcm structure given on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelSelector {
    QBot,
    Q0,
    FcmInt,
    FcmMod(u64),
}

/// A commutative ring given on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSelector {
    Mod(u64),
    Int,
    /// ℤ[X]/(X²)
    Dual,
    Prod(u64, u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Model(ModelSelector),
    Ring(RingSelector),
}

fn modulus(text: &str) -> Result<u64> {
    text.parse().with_context(|| format!("invalid modulus {text:?}"))
}

impl FromStr for ModelSelector {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "qbot" => ModelSelector::QBot,
            "q0" => ModelSelector::Q0,
            "fcm-int" => ModelSelector::FcmInt,
            _ => match s.strip_prefix("fcm-mod:") {
                Some(n) => ModelSelector::FcmMod(modulus(n)?),
                None => bail!("unknown model {s:?}; expected qbot, q0, fcm-int or fcm-mod:<n>"),
            },
        })
    }
}

impl FromStr for RingSelector {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "int" {
            return Ok(RingSelector::Int);
        }
        if s == "dual" {
            return Ok(RingSelector::Dual);
        }
        if let Some(n) = s.strip_prefix("mod:") {
            return Ok(RingSelector::Mod(modulus(n)?));
        }
        if let Some(rest) = s.strip_prefix("prod:") {
            if let Some((a, b)) = rest.split_once(',') {
                return Ok(RingSelector::Prod(modulus(a)?, modulus(b)?));
            }
        }
        bail!("unknown ring {s:?}; expected mod:<n>, int, dual or prod:<a>,<b>")
    }
}

impl FromStr for Target {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<ModelSelector>() {
            Ok(m) => Ok(Target::Model(m)),
            Err(_) => s.parse::<RingSelector>().map(Target::Ring).map_err(|_| {
                anyhow::anyhow!(
                    "unknown target {s:?}; expected qbot, q0, fcm-int, fcm-mod:<n>, mod:<n>, int, dual or prod:<a>,<b>"
                )
            }),
        }
    }
}

impl fmt::Display for ModelSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSelector::QBot => f.write_str("qbot"),
            ModelSelector::Q0 => f.write_str("q0"),
            ModelSelector::FcmInt => f.write_str("fcm-int"),
            ModelSelector::FcmMod(n) => write!(f, "fcm-mod:{n}"),
        }
    }
}

/// ℤ/nℤ, refusing non-squarefree `n` unless allowed.
pub fn mod_ring(n: u64, allow_non_reduced: bool) -> Result<ModRing> {
    if allow_non_reduced {
        Ok(ModRing::allow_non_reduced(n)?)
    } else {
        ModRing::new(n).map_err(|e| anyhow::anyhow!("{e} (pass --allow-non-reduced to proceed anyway)"))
    }
}

pub fn partition(n: u64, allow_non_reduced: bool) -> Result<EquivalencePartition<ModRing>> {
    let ring = mod_ring(n, allow_non_reduced)?;
    Ok(if allow_non_reduced { cc_partition_unchecked(&ring)? } else { cc_partition(&ring)? })
}

pub fn fcm_mod(n: u64, allow_non_reduced: bool) -> Result<FcmFinite<ModRing>> {
    Ok(FcmFinite::new(partition(n, allow_non_reduced)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!("fcm-mod:6".parse::<Target>().unwrap(), Target::Model(ModelSelector::FcmMod(6)));
        assert_eq!("mod:4".parse::<Target>().unwrap(), Target::Ring(RingSelector::Mod(4)));
        assert_eq!("prod:2,3".parse::<Target>().unwrap(), Target::Ring(RingSelector::Prod(2, 3)));
        assert_eq!("q0".parse::<Target>().unwrap(), Target::Model(ModelSelector::Q0));
        assert!("mod:x".parse::<Target>().is_err());
        assert!("rationals".parse::<Target>().is_err());
        assert!(fcm_mod(4, false).is_err());
        assert_eq!(fcm_mod(4, true).unwrap().partition().ring().modulus(), 4);
    }
}
