//! Shared assertion helper for unit tests.

/// Panics unless |actual - expected| <= tol * max(1, |expected|): a relative
/// comparison that degrades to an absolute one near zero.
pub fn assert_close(actual: f64, expected: f64, tol: f64, label: &str) {
    let allowed = tol * expected.abs().max(1.0);
    let diff = (actual - expected).abs();
    assert!(
        diff <= allowed,
        "{label}: {actual} vs {expected} (diff {diff:e}, allowed {allowed:e})"
    );
}
