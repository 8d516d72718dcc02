//! Deterministic point designs on `[0, 1]^d`.

const PRIMES: [u64; 32] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103,
    107, 109, 113, 127, 131,
];

/// Above this objective count fronts are sampled with a Halton sequence
/// instead of a full lattice.
pub const LATTICE_MAX_OBJECTIVES: usize = 4;

fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut scale = inv;
    let mut out = 0.0;
    while index > 0 {
        out += (index % base) as f64 * scale;
        index /= base;
        scale *= inv;
    }
    out
}

/// Halton point with the given index; dimension at most 32.
pub fn halton(index: u64, dim: usize) -> Vec<f64> {
    assert!(dim <= PRIMES.len(), "Halton design supports at most {} dimensions", PRIMES.len());
    PRIMES[..dim].iter().map(|b| radical_inverse(index, *b)).collect()
}

/// Full tensor lattice with `resolution` evenly spaced values per axis,
/// endpoints included; the first coordinate varies slowest.
pub fn lattice(dim: usize, resolution: usize) -> Vec<Vec<f64>> {
    let step = |i: usize| {
        if resolution <= 1 {
            0.0
        } else {
            i as f64 / (resolution - 1) as f64
        }
    };
    let total = resolution.pow(dim as u32);
    (0..total)
        .map(|mut n| {
            let mut p = vec![0.0; dim];
            for k in (0..dim).rev() {
                p[k] = step(n % resolution);
                n /= resolution;
            }
            p
        })
        .collect()
}

/// Number of points in the front design for `objectives` at `resolution`.
pub fn design_size(objectives: usize, resolution: usize) -> usize {
    if objectives > LATTICE_MAX_OBJECTIVES {
        resolution.pow(3)
    } else {
        resolution.pow(objectives as u32 - 1)
    }
}

/// Meta-variable targets used to sample a front: a lattice for up to four
/// objectives, otherwise the first `resolution³` Halton points.
pub fn front_design(objectives: usize, resolution: usize) -> Vec<Vec<f64>> {
    let dim = objectives - 1;
    if objectives > LATTICE_MAX_OBJECTIVES {
        (0..design_size(objectives, resolution) as u64)
            .map(|i| halton(i, dim))
            .collect()
    } else {
        lattice(dim, resolution)
    }
}

/// Largest resolution whose front design fits in `n` points (0 if none ≥ 2).
pub fn matching_resolution(objectives: usize, n: usize) -> usize {
    let mut r = 1;
    while design_size(objectives, r + 1) <= n {
        r += 1;
    }
    if r < 2 {
        0
    } else {
        r
    }
}

/// `n` targets that contain the front design at [`matching_resolution`] and
/// fill the remainder from the Halton sequence.
pub fn set_design(objectives: usize, n: usize) -> Vec<Vec<f64>> {
    let dim = objectives - 1;
    if objectives > LATTICE_MAX_OBJECTIVES {
        return (0..n as u64).map(|i| halton(i, dim)).collect();
    }
    let r = matching_resolution(objectives, n);
    let mut out = if r >= 2 { lattice(dim, r) } else { Vec::new() };
    let mut index = 1u64;
    while out.len() < n {
        out.push(halton(index, dim));
        index += 1;
    }
    out
}
