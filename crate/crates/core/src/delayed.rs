//! Delayed argument resolution.
//!
//! The referent filling a verb argument is read off the argument NP's own
//! UDRS. Identity of the NP's distinguished labels yields the referent at
//! L-MAX, strict subordination yields the restrictor referent, and a merely
//! weak relation leaves the slot pending until a later disambiguation.

use crate::closure::closure;
use crate::error::{Error, Result};
use crate::udrs::{PendingKey, Referent, SlotState, Udrs};

/// How an NP's distinguished labels are related in its local SUBORD.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScopeStatus {
    NotScopeBearing,
    ScopeBearing,
    PotentiallyScopeBearing,
}

pub fn scope_status(np: &Udrs) -> Result<ScopeStatus> {
    let cl = closure(&np.subord)?;
    let (max, min) = (np.ls.max, np.ls.min);
    if cl.eq(max, min) {
        Ok(ScopeStatus::NotScopeBearing)
    } else if cl.gt(max, min) {
        Ok(ScopeStatus::ScopeBearing)
    } else if cl.ge(max, min) {
        Ok(ScopeStatus::PotentiallyScopeBearing)
    } else {
        Err(Error::MalformedNp(format!(
            "no subordination between {max} and {min}"
        )))
    }
}

/// The referent for a verb argument slot, or `None` while delayed.
pub fn dref_res(np: &Udrs) -> Result<Option<Referent>> {
    let missing = |what: &str| Error::MalformedNp(format!("no referent {what}"));
    match scope_status(np)? {
        ScopeStatus::NotScopeBearing => np
            .referent_at(np.ls.max)
            .map(Some)
            .ok_or_else(|| missing(&format!("at {}", np.ls.max))),
        ScopeStatus::ScopeBearing => {
            let (_, res, _) = np
                .quantifier_at(np.ls.max)
                .ok_or_else(|| missing(&format!("quantifier at {}", np.ls.max)))?;
            np.referent_at(res)
                .map(Some)
                .ok_or_else(|| missing(&format!("in restrictor {res}")))
        }
        ScopeStatus::PotentiallyScopeBearing => Ok(None),
    }
}

/// Fills every slot linked to `key` with `dref`.
pub fn resolve_pending(u: &mut Udrs, key: PendingKey, dref: Referent) -> Result<()> {
    let mut found = false;
    for state in u.slots.values() {
        if let SlotState::Linked { np, value } = state {
            if *np == key {
                found = true;
                if value.is_some_and(|v| v != dref) {
                    return Err(Error::ConflictingResolution { key });
                }
            }
        }
    }
    if !found {
        return Err(Error::UnknownKey { key });
    }
    for state in u.slots.values_mut() {
        if let SlotState::Linked { np, value } = state {
            if *np == key {
                *value = Some(dref);
            }
        }
    }
    Ok(())
}

/// Whether any slot is still linked to `key` without a value.
pub fn is_pending(u: &Udrs, key: PendingKey) -> bool {
    u.pending_keys().contains(&key)
}
