//! Deliberate definition mutations, switchable per thread, used to check that the
//! audits and the differential harness notice broken predicates.

use std::cell::Cell;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Majority tests cover neighbours with two-vertex paths instead of three-vertex paths.
    MajorUsesEdges,
    /// Hole recognition no longer rejects chords.
    HoleIgnoresChords,
    /// Path weights prefer the lexicographically later edge set.
    WeightReversed,
    /// Anticompleteness no longer requires disjointness.
    AnticompleteIgnoresOverlap,
    /// Claw arm bounds used for theta detection are off by one.
    ThetaShortArms,
    /// Jewel detection stops requiring paths of different parity.
    JewelIgnoresParity,
}

impl Fault {
    pub const ALL: [Fault; 6] = [
        Fault::MajorUsesEdges,
        Fault::HoleIgnoresChords,
        Fault::WeightReversed,
        Fault::AnticompleteIgnoresOverlap,
        Fault::ThetaShortArms,
        Fault::JewelIgnoresParity,
    ];
}

thread_local! {
    static ACTIVE: Cell<Option<Fault>> = const { Cell::new(None) };
}

#[inline]
pub fn active(f: Fault) -> bool {
    ACTIVE.with(|a| a.get() == Some(f))
}

/// Runs `body` with `fault` injected on the current thread, restoring the previous state after.
pub fn with<R>(fault: Option<Fault>, body: impl FnOnce() -> R) -> R {
    struct Restore(Option<Fault>);
    impl Drop for Restore {
        fn drop(&mut self) {
            ACTIVE.with(|a| a.set(self.0));
        }
    }
    let _restore = Restore(ACTIVE.with(|a| a.replace(fault)));
    body()
}
