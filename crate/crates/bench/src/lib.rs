//! Shared inputs for the criterion benchmarks in `benches/`.

use mutrel_core::synth;

/// Seeded fGn input of the given power-of-two length.
pub fn fgn_input(len: usize, h: f64) -> Vec<f64> {
    synth::fgn(len, h, 0xBE7C).expect("valid fgn parameters")
}
