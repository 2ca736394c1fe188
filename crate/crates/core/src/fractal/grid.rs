/// Number of window sizes in the default grids, before deduplication.
pub const DEFAULT_GRID_POINTS: usize = 20;

/// `count` integers geometrically spaced over `[min, max]`, rounded and
/// deduplicated. Both endpoints are included whenever `min <= max`.
pub fn geometric_grid(min: usize, max: usize, count: usize) -> Vec<usize> {
    if min == 0 || max < min || count == 0 {
        return Vec::new();
    }
    if count == 1 || min == max {
        return vec![min];
    }
    let ratio = (max as f64 / min as f64).ln();
    let mut grid: Vec<usize> = (0..count)
        .map(|i| {
            let t = i as f64 / (count - 1) as f64;
            ((min as f64) * (ratio * t).exp()).round() as usize
        })
        .map(|w| w.clamp(min, max))
        .collect();
    grid.dedup();
    grid
}

/// DFA windows for a series of length `n`: geometric over `[4, n/4]`.
pub fn default_dfa_windows(n: usize) -> Vec<usize> {
    geometric_grid(4, n / 4, DEFAULT_GRID_POINTS)
}

/// R/S windows for a series of length `n`: geometric over `[8, n/4]`.
pub fn default_rs_windows(n: usize) -> Vec<usize> {
    geometric_grid(8, n / 4, DEFAULT_GRID_POINTS)
}
