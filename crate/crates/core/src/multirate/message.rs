use crate::field::GroundElement;

/// A user message split into `k` segments over GF(q); segment `i` has a
/// length `ℓᵢ` in `1..=n`, and `Σ ℓᵢ` is the message length `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MessageBlock {
    segments: Vec<Vec<GroundElement>>,
}

impl MessageBlock {
    pub fn new(segments: Vec<Vec<GroundElement>>) -> Self {
        Self { segments }
    }

    pub fn segments(&self) -> &[Vec<GroundElement>] {
        &self.segments
    }

    pub fn into_segments(self) -> Vec<Vec<GroundElement>> {
        self.segments
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.segments.iter().map(Vec::len).collect()
    }

    /// ℓ, the total number of GF(q) symbols.
    pub fn total_len(&self) -> usize {
        self.segments.iter().map(Vec::len).sum()
    }
}

impl From<Vec<Vec<GroundElement>>> for MessageBlock {
    fn from(segments: Vec<Vec<GroundElement>>) -> Self {
        Self::new(segments)
    }
}
