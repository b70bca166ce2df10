//! Deterministic Gaussian noise.
//!
//! Draws are keyed by (seed, index): draw i is a pure function of those two
//! integers, so any prefix of a stream is independent of the requested
//! length, streams can be regenerated piecemeal, and output is reproducible
//! across platforms. The pipeline is the splitmix64 mixing function (counter
//! mode), a (0, 1) uniform from the top 53 bits, and the AS241 (PPND16)
//! rational approximation of the standard normal quantile, which is accurate
//! to about 1e-16 relative error. The only transcendental calls are routed
//! through `libm` so results do not depend on the platform's math library.

use crate::error::{Error, Result};
use serde::Serialize;

/// Identifies the noise pipeline; recorded in output headers so a stream can
/// be regenerated later. Bump when any stage changes.
pub const GENERATOR_VERSION: &str = "splitmix64-as241-v1";

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix64(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The i-th raw 64-bit word of the stream for `seed`. Equivalent to the i-th
/// output of a sequentially stepped splitmix64 generator seeded with `seed`.
pub fn raw_u64(seed: u64, index: u64) -> u64 {
    mix64(seed.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}

/// Uniform draw strictly inside (0, 1): (k + 0.5) / 2^53 with k the top 53
/// bits of the raw word. Never returns an endpoint, so the quantile transform
/// below is always finite.
pub fn uniform_open01(seed: u64, index: u64) -> f64 {
    ((raw_u64(seed, index) >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0)
}

/// Standard normal quantile (inverse CDF) by algorithm AS241, routine PPND16.
/// Returns NaN outside (0, 1).
// Coefficients are kept at their published precision.
#[allow(clippy::excessive_precision)]
pub fn normal_quantile(p: f64) -> f64 {
    if !(p > 0.0 && p < 1.0) {
        return f64::NAN;
    }
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        let num = (((((((2.509_080_928_730_122_7e3 * r + 3.343_057_558_358_812_8e4) * r
            + 6.726_577_092_700_870_1e4)
            * r
            + 4.592_195_393_154_987_15e4)
            * r
            + 1.373_169_376_550_946_1e4)
            * r
            + 1.971_590_950_306_551_3e3)
            * r
            + 1.331_416_678_917_843_8e2)
            * r
            + 3.387_132_872_796_366_608)
            * q;
        let den = ((((((5.226_495_278_852_854_5e3 * r + 2.872_908_573_572_194_3e4) * r
            + 3.930_789_580_009_271e4)
            * r
            + 2.121_379_430_158_659_7e4)
            * r
            + 5.394_196_021_424_751e3)
            * r
            + 6.871_870_074_920_579e2)
            * r
            + 4.231_333_070_160_091e1)
            * r
            + 1.0;
        return num / den;
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let mut r = libm::sqrt(-libm::log(r));
    let z = if r <= 5.0 {
        r -= 1.6;
        let num = ((((((7.745_450_142_783_414e-4 * r + 2.272_384_498_926_918_4e-2) * r
            + 2.417_807_251_774_506e-1)
            * r
            + 1.270_458_252_452_368_38)
            * r
            + 3.647_848_324_763_204_6)
            * r
            + 5.769_497_221_460_691)
            * r
            + 4.630_337_846_156_545)
            * r
            + 1.423_437_110_749_683_57;
        let den = (((((((1.050_750_071_644_416_9e-9 * r + 5.475_938_084_995_345e-4) * r
            + 1.519_866_656_361_645_7e-2)
            * r
            + 1.481_039_764_274_800_8e-1)
            * r
            + 6.897_673_349_851e-1)
            * r
            + 1.676_384_830_183_803_8)
            * r
            + 2.053_191_626_637_758_8)
            * r)
            + 1.0;
        num / den
    } else {
        r -= 5.0;
        let num = ((((((2.010_334_399_292_288_1e-7 * r + 2.711_555_568_743_487_6e-5) * r
            + 1.242_660_947_388_078_4e-3)
            * r
            + 2.653_218_952_657_612_4e-2)
            * r
            + 2.965_605_718_285_048_9e-1)
            * r
            + 1.784_826_539_917_291_3)
            * r
            + 5.463_784_911_164_114)
            * r
            + 6.657_904_643_501_103;
        let den = (((((((2.044_263_103_389_939_7e-15 * r + 1.421_511_758_316_445_9e-7) * r
            + 1.846_318_317_510_054_8e-5)
            * r
            + 7.868_691_311_456_132e-4)
            * r
            + 1.487_536_129_085_061_5e-2)
            * r
            + 1.369_298_809_227_358e-1)
            * r
            + 5.998_322_065_558_88e-1)
            * r)
            + 1.0;
        num / den
    };
    if q < 0.0 {
        -z
    } else {
        z
    }
}

/// The i-th standard normal draw of the stream for `seed`.
pub fn standard_normal(seed: u64, index: u64) -> f64 {
    normal_quantile(uniform_open01(seed, index))
}

/// Marginal distribution of a noise stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[non_exhaustive]
pub enum NoiseDistribution {
    Gaussian,
}

/// A reproducible noise stream: seed, length, and innovation scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NoiseSpec {
    seed: u64,
    length: usize,
    sigma: f64,
    distribution: NoiseDistribution,
}

impl NoiseSpec {
    /// Gaussian spec; the length must be positive and sigma positive and
    /// finite.
    pub fn new(seed: u64, length: usize, sigma: f64) -> Result<Self> {
        if length == 0 {
            return Err(Error::invalid("noise length must be positive"));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::invalid(format!(
                "sigma must be positive and finite, got {sigma}"
            )));
        }
        Ok(NoiseSpec {
            seed,
            length,
            sigma,
            distribution: NoiseDistribution::Gaussian,
        })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn distribution(&self) -> NoiseDistribution {
        self.distribution
    }
}

/// The full noise stream for `spec`: draw i is sigma * standard_normal(seed, i).
pub fn white_noise(spec: &NoiseSpec) -> Vec<f64> {
    (0..spec.length)
        .map(|i| spec.sigma * standard_normal(spec.seed, i as u64))
        .collect()
}
