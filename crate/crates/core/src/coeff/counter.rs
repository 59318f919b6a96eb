use std::cell::Cell;
use std::fmt;

use super::Ring;

/// A snapshot of an [`OpCounter`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCounts {
    pub adds: u64,
    pub muls: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.adds + self.muls
    }
}

impl fmt::Display for OpCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ops={} (adds={}, muls={})",
            self.total(),
            self.adds,
            self.muls
        )
    }
}

/// Tallies of ring additions and multiplications.
///
/// Uses `Cell`s so that counting works through shared references; the
/// counter is therefore `!Sync` and confined to one thread.
#[derive(Debug, Default)]
pub struct OpCounter {
    adds: Cell<u64>,
    muls: Cell<u64>,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn adds(&self) -> u64 {
        self.adds.get()
    }

    pub fn muls(&self) -> u64 {
        self.muls.get()
    }

    pub fn total(&self) -> u64 {
        self.adds() + self.muls()
    }

    pub fn reset(&self) {
        self.adds.set(0);
        self.muls.set(0);
    }

    pub fn snapshot(&self) -> OpCounts {
        OpCounts {
            adds: self.adds(),
            muls: self.muls(),
        }
    }

    fn bump_add(&self) {
        self.adds.set(self.adds.get() + 1);
    }

    fn bump_mul(&self) {
        self.muls.set(self.muls.get() + 1);
    }
}

/// Routes ring arithmetic, optionally counting every operation.
///
/// Each [`RingCtx::add`] and [`RingCtx::mul`] is one operation in the
/// coefficient ring regardless of the size of its operands.
#[derive(Debug, Default)]
pub struct RingCtx {
    counter: Option<OpCounter>,
}

impl RingCtx {
    /// A context that does not count.
    pub fn plain() -> Self {
        Self { counter: None }
    }

    /// A context with a fresh counter.
    pub fn counting() -> Self {
        Self {
            counter: Some(OpCounter::new()),
        }
    }

    pub fn is_counting(&self) -> bool {
        self.counter.is_some()
    }

    pub fn counter(&self) -> Option<&OpCounter> {
        self.counter.as_ref()
    }

    /// Current tallies, or zeros when not counting.
    pub fn counts(&self) -> OpCounts {
        self.counter
            .as_ref()
            .map(OpCounter::snapshot)
            .unwrap_or_default()
    }

    pub fn reset(&self) {
        if let Some(c) = &self.counter {
            c.reset();
        }
    }

    #[inline]
    pub fn add<R: Ring>(&self, a: &R, b: &R) -> R {
        if let Some(c) = &self.counter {
            c.bump_add();
        }
        a.add_ref(b)
    }

    #[inline]
    pub fn mul<R: Ring>(&self, a: &R, b: &R) -> R {
        if let Some(c) = &self.counter {
            c.bump_mul();
        }
        a.mul_ref(b)
    }
}
