use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Named, reproducible random stream.
///
/// A `(seed, stream_id)` pair addresses an independent substream of a counter
/// based generator, so experiment components (sampler, search, Monte-Carlo
/// estimator, …) can each own a generator without coordinating draw counts.
/// The same pair always yields the same sequence on every platform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    pub seed: u64,
    pub stream_id: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        Self { seed, stream_id }
    }

    /// A stream with the same seed and a different stream id.
    pub fn substream(&self, stream_id: u64) -> Self {
        Self { seed: self.seed, stream_id }
    }

    /// Instantiate the generator for this stream.
    pub fn rng(&self) -> ChaCha12Rng {
        let mut rng = ChaCha12Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_id);
        rng
    }
}
