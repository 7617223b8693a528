//! Reference integrator for the tests: adaptive Gauss–Kronrod 7/15 with
//! interval bisection. Independent of the crate's Golub–Welsch rules.

#![allow(dead_code)]

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn kronrod(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        k += WGK[j] * pair;
        if j % 2 == 1 {
            g += WG[j / 2] * pair;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// `∫_a^b f` to absolute accuracy `tol` (or until the depth limit).
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn go(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (val, err) = kronrod(f, a, b);
        if err <= tol || depth == 0 {
            return val;
        }
        let m = 0.5 * (a + b);
        go(f, a, m, 0.5 * tol, depth - 1) + go(f, m, b, 0.5 * tol, depth - 1)
    }
    go(f, a, b, tol, 40)
}

/// `∫` over `[-half, half]` split into `pieces` panels, each refined to a
/// relative target `rel` of a first coarse estimate.
pub fn integrate_panels(f: &dyn Fn(f64) -> f64, half: f64, pieces: usize, rel: f64) -> f64 {
    let h = 2.0 * half / pieces as f64;
    let coarse: f64 = (0..pieces)
        .map(|k| kronrod(f, -half + k as f64 * h, -half + (k + 1) as f64 * h).0.abs())
        .sum();
    let tol = rel * coarse.max(f64::MIN_POSITIVE) / pieces as f64;
    (0..pieces)
        .map(|k| integrate(f, -half + k as f64 * h, -half + (k + 1) as f64 * h, tol))
        .sum()
}

/// `∫ p(x) exp(-s²x²) |sx|^(2α+1) dx` over the line (Gaussian when `alpha = None`).
pub fn gaussian_moment(p: &dyn Fn(f64) -> f64, s: f64, alpha: Option<f64>) -> f64 {
    let w = move |x: f64| {
        let g = (-(s * x) * (s * x)).exp();
        match alpha {
            None => g,
            Some(a) => g * (s * x).abs().powf(2.0 * a + 1.0),
        }
    };
    let f = |x: f64| p(x) * w(x);
    integrate_panels(&f, 16.0 / s, 64, 1e-14)
}

/// `∫_{-1}^{1} p(x) (1-x²)^α dx` through `x = sin θ`, which removes the
/// endpoint singularity of the weight.
pub fn jacobi_moment(p: &dyn Fn(f64) -> f64, alpha: f64) -> f64 {
    let f = |t: f64| p(t.sin()) * t.cos().powf(2.0 * alpha + 1.0);
    integrate_panels(&f, std::f64::consts::FRAC_PI_2, 32, 1e-14)
}
