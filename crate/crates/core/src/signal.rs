//! Symbolic physical-layer model of the shared channel.
//!
//! A [`Signal`] is the set of frames on the air during one slot. The receiver
//! observes only two things about a signal: its ternary classification
//! ([`Feedback`]) and, when exactly one frame is present, the frame itself.
//! Because those observables are functions of the frame set alone, signals
//! carry frame identities rather than waveforms.
//!
//! Cancellation ([`cancel`]) is exact set difference: subtracting the signal
//! of a decoded subset from a stored collision exposes the complementary
//! subset's signal. Channel noise is not modeled; an idle slot classifies as
//! [`Feedback::Empty`].

use std::collections::BTreeSet;

/// One user payload: owner, a per-user monotone counter, and the slot it
/// arrived in.
///
/// `(user_id, seq)` is unique within a replication, so equality on frames is
/// identity, not payload comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frame {
    pub user_id: u32,
    pub seq: u32,
    pub arrival_slot: u64,
}

impl Frame {
    pub fn new(user_id: u32, seq: u32, arrival_slot: u64) -> Self {
        Self {
            user_id,
            seq,
            arrival_slot,
        }
    }
}

/// Ternary channel outcome for one slot: idle, one frame decoded, or a
/// collision of two or more frames.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feedback {
    Empty,
    Single,
    Collision,
}

/// Errors raised when an operation's model preconditions are violated.
///
/// These indicate the simulator paired the wrong signals or let a user
/// transmit twice in one slot; callers treat them as fatal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("frame {0:?} transmitted more than once in a single slot")]
    DuplicateTransmission(Frame),
    #[error("cancelled signal is not contained in the stored signal (missing {missing:?})")]
    NotSubsignal { missing: Frame },
    #[error("cannot extract a single frame from a signal holding {0} frames")]
    NotSingle(usize),
}

/// The superposition of the frames transmitted in one slot.
///
/// Each user transmits its single buffered frame at most once per slot, so
/// the multiset of frames on the channel is in fact a set; set semantics are
/// enforced by construction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signal {
    frames: BTreeSet<Frame>,
}

impl Signal {
    /// The idle channel: background noise only.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_frame(frame: Frame) -> Self {
        let mut frames = BTreeSet::new();
        frames.insert(frame);
        Self { frames }
    }

    pub fn from_frames<I: IntoIterator<Item = Frame>>(frames: I) -> Self {
        Self {
            frames: frames.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn contains(&self, frame: &Frame) -> bool {
        self.frames.contains(frame)
    }

    /// Frames in ascending `(user_id, seq)` order.
    pub fn frames(&self) -> impl Iterator<Item = &Frame> {
        self.frames.iter()
    }

    /// Ternary classification: a pure function of cardinality.
    pub fn classify(&self) -> Feedback {
        match self.frames.len() {
            0 => Feedback::Empty,
            1 => Feedback::Single,
            _ => Feedback::Collision,
        }
    }
}

/// Sum the signals of simultaneous transmitters.
///
/// The parts must be pairwise disjoint: a frame appearing twice means the
/// model let one user transmit twice in a slot.
pub fn superpose(parts: &[Signal]) -> Result<Signal, ModelError> {
    let mut frames = BTreeSet::new();
    for part in parts {
        for frame in part.frames() {
            if !frames.insert(*frame) {
                return Err(ModelError::DuplicateTransmission(*frame));
            }
        }
    }
    Ok(Signal { frames })
}

/// Subtract a decoded component from a stored signal, exposing the residual.
///
/// Cancellation is exact: the residual is the set difference. `part` must be
/// contained in `whole` frame-wise.
pub fn cancel(whole: &Signal, part: &Signal) -> Result<Signal, ModelError> {
    for frame in part.frames() {
        if !whole.contains(frame) {
            return Err(ModelError::NotSubsignal { missing: *frame });
        }
    }
    Ok(Signal {
        frames: whole
            .frames()
            .filter(|f| !part.contains(f))
            .copied()
            .collect(),
    })
}

/// Decode the unique frame of a single-frame signal.
pub fn extract_frame(signal: &Signal) -> Result<Frame, ModelError> {
    if signal.len() != 1 {
        return Err(ModelError::NotSingle(signal.len()));
    }
    Ok(*signal.frames().next().expect("len checked"))
}
