//! Gauss-Kronrod panel rules (QUADPACK abscissae and weights).

use crate::error::Result;
use crate::real::{c, Real};

#[allow(clippy::excessive_precision)]
const XGK15: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WG7: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
#[allow(clippy::excessive_precision)]
const WGK15: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const XGK21: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WG10: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
#[allow(clippy::excessive_precision)]
const WGK21: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Embedded Gauss/Kronrod pair, abscissae on `[0, 1]` mirrored about the centre.
#[derive(Debug, Clone)]
pub(crate) struct KronrodRule<T> {
    xgk: Vec<T>,
    wg: Vec<T>,
    wgk: Vec<T>,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct PanelEstimate<T> {
    pub value: T,
    pub error: T,
}

impl<T: Real> KronrodRule<T> {
    /// Supported sizes: 15 (G7/K15) and 21 (G10/K21).
    pub fn new(nodes: usize) -> Option<Self> {
        let (xgk, wg, wgk): (&[f64], &[f64], &[f64]) = match nodes {
            15 => (&XGK15, &WG7, &WGK15),
            21 => (&XGK21, &WG10, &WGK21),
            _ => return None,
        };
        Some(Self {
            xgk: xgk.iter().map(|&v| c(v)).collect(),
            wg: wg.iter().map(|&v| c(v)).collect(),
            wgk: wgk.iter().map(|&v| c(v)).collect(),
        })
    }

    pub fn apply<F>(&self, f: &mut F, a: T, b: T) -> Result<PanelEstimate<T>>
    where
        F: FnMut(T) -> Result<T>,
    {
        let n = self.xgk.len();
        let half = c::<T>(0.5);
        let center = half * (a + b);
        let half_len = half * (b - a);
        let abs_half = half_len.abs();

        let mut fv1 = vec![T::zero(); n - 1];
        let mut fv2 = vec![T::zero(); n - 1];
        let f_center = f(center)?;
        let mut res_gauss = if n.is_multiple_of(2) {
            f_center * self.wg[n / 2 - 1]
        } else {
            T::zero()
        };
        let mut res_kronrod = f_center * self.wgk[n - 1];
        let mut res_abs = res_kronrod.abs();

        for j in 0..(n - 1) / 2 {
            let jtw = 2 * j + 1;
            let dx = half_len * self.xgk[jtw];
            let f1 = f(center - dx)?;
            let f2 = f(center + dx)?;
            fv1[jtw] = f1;
            fv2[jtw] = f2;
            res_gauss = res_gauss + self.wg[j] * (f1 + f2);
            res_kronrod = res_kronrod + self.wgk[jtw] * (f1 + f2);
            res_abs = res_abs + self.wgk[jtw] * (f1.abs() + f2.abs());
        }
        for j in 0..n / 2 {
            let jtw = 2 * j;
            let dx = half_len * self.xgk[jtw];
            let f1 = f(center - dx)?;
            let f2 = f(center + dx)?;
            fv1[jtw] = f1;
            fv2[jtw] = f2;
            res_kronrod = res_kronrod + self.wgk[jtw] * (f1 + f2);
            res_abs = res_abs + self.wgk[jtw] * (f1.abs() + f2.abs());
        }

        let mean = res_kronrod * half;
        let mut res_asc = self.wgk[n - 1] * (f_center - mean).abs();
        for j in 0..n - 1 {
            res_asc = res_asc + self.wgk[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
        }

        let raw = ((res_kronrod - res_gauss) * half_len).abs();
        let value = res_kronrod * half_len;
        res_abs = res_abs * abs_half;
        res_asc = res_asc * abs_half;

        Ok(PanelEstimate {
            value,
            error: rescale_error(raw, res_abs, res_asc),
        })
    }
}

fn rescale_error<T: Real>(err: T, res_abs: T, res_asc: T) -> T {
    let eps = T::epsilon();
    let mut e = err;
    if res_asc != T::zero() && e != T::zero() {
        let scale = (c::<T>(200.0) * e / res_asc).powf(c(1.5));
        e = if scale < T::one() { res_asc * scale } else { res_asc };
    }
    if res_abs > T::min_positive_value() / (c::<T>(50.0) * eps) {
        let floor = c::<T>(50.0) * eps * res_abs;
        if floor > e {
            e = floor;
        }
    }
    e
}
