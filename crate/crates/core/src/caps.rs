//! Size limits for exhaustive searches.

use crate::error::{Error, Result};

/// Upper bounds on group orders fed to exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group whose full subgroup lattice is enumerated.
    pub subgroups: usize,
    /// Largest group whose automorphism group is listed.
    pub automorphisms: usize,
    /// Largest order accepted by isomorphism tests.
    pub isomorphism: usize,
    /// Largest star group over which braces are enumerated.
    pub brace_enumeration: usize,
    /// Maximum multiplicity of subgroups per orbit in spec enumeration.
    pub families_per_orbit: usize,
    /// Largest number of orbits whose subsets are scanned in spec enumeration.
    pub orbit_subsets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subgroups: 64,
            automorphisms: 64,
            isomorphism: 128,
            brace_enumeration: 16,
            families_per_orbit: 2,
            orbit_subsets: 12,
        }
    }
}

impl Caps {
    /// Raise or lower every order cap to `order`.
    pub fn with_order_cap(self, order: usize) -> Self {
        Caps {
            subgroups: order,
            automorphisms: order,
            isomorphism: 2 * order,
            brace_enumeration: order,
            ..self
        }
    }

    pub(crate) fn check(order: usize, cap: usize) -> Result<()> {
        if order > cap {
            Err(Error::OrderCapExceeded { order, cap })
        } else {
            Ok(())
        }
    }
}
