use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::functions as f;
use crate::error::{Error, Result};
use crate::space::{Bounds, RealVector};

/// Landscape family, following the grouping of the comparison tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    ManyLocalOptima,
    PlateShaped,
    ValleyShaped,
    Other,
    /// Development objectives (sinusoidal, sphere) outside the comparison tables.
    Demo,
}

impl Category {
    pub const ALL: [Category; 5] = [
        Category::ManyLocalOptima,
        Category::PlateShaped,
        Category::ValleyShaped,
        Category::Other,
        Category::Demo,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::ManyLocalOptima => "many_local_optima",
            Category::PlateShaped => "plate_shaped",
            Category::ValleyShaped => "valley_shaped",
            Category::Other => "other",
            Category::Demo => "demo",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Category::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown category `{s}`")))
    }
}

/// A named objective with its evaluation box and published optimum.
#[derive(Debug, Clone)]
pub struct BenchmarkFunction {
    pub name: &'static str,
    pub category: Category,
    pub default_bounds: Bounds,
    pub known_optimum_value: f64,
    pub known_optimizers: Vec<RealVector>,
    /// How far the value at a known optimizer may sit from `known_optimum_value`.
    pub optimum_tolerance: f64,
    pub note: Option<&'static str>,
    /// Whether extra trailing coordinates are accepted (and ignored).
    extensible: bool,
    func: fn(&[f64]) -> f64,
}

impl BenchmarkFunction {
    /// An ad-hoc objective that is not part of the catalog.
    pub fn custom(
        name: &'static str,
        bounds: Bounds,
        known_optimum_value: f64,
        func: fn(&[f64]) -> f64,
    ) -> Self {
        BenchmarkFunction {
            name,
            category: Category::Other,
            default_bounds: bounds,
            known_optimum_value,
            known_optimizers: Vec::new(),
            optimum_tolerance: 1e-4,
            note: None,
            extensible: false,
            func,
        }
    }

    pub fn dimension(&self) -> usize {
        self.default_bounds.dimension()
    }

    /// Evaluates without checking the dimension.
    #[inline]
    pub fn value(&self, x: &[f64]) -> f64 {
        (self.func)(x)
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension() {
            return Err(Error::InvalidInput(format!(
                "`{}` expects dimension {} but got {}",
                self.name,
                self.dimension(),
                x.len()
            )));
        }
        Ok(self.value(x))
    }

    /// A copy posed in a higher dimension. Only objectives that ignore extra
    /// coordinates support this; the new coordinates reuse the last interval.
    pub fn with_dimension(&self, dimension: usize) -> Result<Self> {
        if dimension == self.dimension() {
            return Ok(self.clone());
        }
        if !self.extensible || dimension < self.dimension() {
            return Err(Error::InvalidConfiguration(format!(
                "`{}` is defined only in dimension {}",
                self.name,
                self.dimension()
            )));
        }
        let mut out = self.clone();
        out.default_bounds = self.default_bounds.extended_to(dimension);
        out.known_optimizers = self
            .known_optimizers
            .iter()
            .map(|x| {
                let mut v = x.as_slice().to_vec();
                v.resize(dimension, 0.0);
                RealVector::from_vec_unchecked(v)
            })
            .collect();
        Ok(out)
    }

    pub fn catalog_entry(&self) -> CatalogEntry {
        CatalogEntry {
            name: self.name.to_string(),
            category: self.category,
            dimension: self.dimension(),
            bounds: self
                .default_bounds
                .intervals()
                .iter()
                .map(|iv| (iv.low, iv.high))
                .collect(),
            known_optimum_value: self.known_optimum_value,
            known_optimizers: self
                .known_optimizers
                .iter()
                .map(|x| x.as_slice().to_vec())
                .collect(),
            note: self.note.map(str::to_string),
        }
    }
}

impl PartialEq for BenchmarkFunction {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.default_bounds == other.default_bounds
            && self.known_optimum_value.to_bits() == other.known_optimum_value.to_bits()
    }
}

/// Serializable view of a catalog entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub category: Category,
    pub dimension: usize,
    pub bounds: Vec<(f64, f64)>,
    pub known_optimum_value: f64,
    pub known_optimizers: Vec<Vec<f64>>,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Registry {
    entries: BTreeMap<&'static str, BenchmarkFunction>,
}

const ALIASES: &[(&str, &str)] = &[("levy", "levy_n13")];

impl Registry {
    pub fn standard() -> Self {
        let mut entries = BTreeMap::new();
        for b in catalog() {
            let prev = entries.insert(b.name, b);
            assert!(prev.is_none(), "duplicate benchmark name");
        }
        Registry { entries }
    }

    pub fn lookup(&self, name: &str) -> Result<&BenchmarkFunction> {
        let canonical = ALIASES
            .iter()
            .find(|(alias, _)| *alias == name)
            .map_or(name, |(_, target)| target);
        self.entries
            .get(canonical)
            .ok_or_else(|| Error::UnknownFunction(name.to_string()))
    }

    pub fn evaluate(&self, name: &str, x: &[f64]) -> Result<f64> {
        self.lookup(name)?.evaluate(x)
    }

    /// Sorted names, optionally restricted to one category.
    pub fn list_functions(&self, category: Option<Category>) -> Vec<&'static str> {
        self.entries
            .values()
            .filter(|b| category.is_none_or(|c| b.category == c))
            .map(|b| b.name)
            .collect()
    }

    /// Like [`Registry::list_functions`] with the category given by name.
    pub fn list_by_category_name(&self, category: Option<&str>) -> Result<Vec<&'static str>> {
        let c = category.map(str::parse).transpose()?;
        Ok(self.list_functions(c))
    }

    pub fn iter(&self) -> impl Iterator<Item = &BenchmarkFunction> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The shared, immutable standard catalog.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::standard)
}

fn entry(
    name: &'static str,
    category: Category,
    bounds: Vec<(f64, f64)>,
    optimum: f64,
    optimizers: Vec<Vec<f64>>,
    func: fn(&[f64]) -> f64,
) -> BenchmarkFunction {
    BenchmarkFunction {
        name,
        category,
        default_bounds: Bounds::new(bounds).expect("catalog bounds are valid"),
        known_optimum_value: optimum,
        known_optimizers: optimizers
            .into_iter()
            .map(|x| RealVector::new(x).expect("catalog optimizers are finite"))
            .collect(),
        optimum_tolerance: 1e-4,
        note: None,
        extensible: false,
        func,
    }
}

fn square(low: f64, high: f64) -> Vec<(f64, f64)> {
    vec![(low, high); 2]
}

fn catalog() -> Vec<BenchmarkFunction> {
    use Category::*;
    let c = 1.349_406_608_602_084;
    let mut out = vec![
        entry("ackley", ManyLocalOptima, square(-32.768, 32.768), 0.0, vec![vec![0.0, 0.0]], f::ackley),
        entry("bukin_n6", ManyLocalOptima, vec![(-15.0, -5.0), (-3.0, 3.0)], 0.0, vec![vec![-10.0, 1.0]], f::bukin_n6),
        entry("rastrigin", ManyLocalOptima, square(-5.12, 5.12), 0.0, vec![vec![0.0, 0.0]], f::rastrigin),
        entry(
            "cross_in_tray",
            ManyLocalOptima,
            square(-10.0, 10.0),
            -2.06262,
            vec![vec![c, c], vec![c, -c], vec![-c, c], vec![-c, -c]],
            f::cross_in_tray,
        ),
        entry("levy_n13", ManyLocalOptima, square(-10.0, 10.0), 0.0, vec![vec![1.0, 1.0]], f::levy_n13),
        entry("eggholder", ManyLocalOptima, square(-512.0, 512.0), -959.6407, vec![vec![512.0, 404.2319]], f::eggholder),
        entry("schaffer_n2", ManyLocalOptima, square(-100.0, 100.0), 0.0, vec![vec![0.0, 0.0]], f::schaffer_n2),
        entry("schwefel", ManyLocalOptima, square(-500.0, 500.0), 0.0, vec![vec![420.9687, 420.9687]], f::schwefel),
        entry(
            "shubert",
            ManyLocalOptima,
            square(-10.0, 10.0),
            -186.7309,
            vec![vec![-7.083_506_4, 4.858_056_9], vec![4.858_056_9, -7.083_506_4]],
            f::shubert,
        ),
        entry("drop_wave", ManyLocalOptima, square(-5.12, 5.12), -1.0, vec![vec![0.0, 0.0]], f::drop_wave),
        entry(
            "himmelblau",
            ManyLocalOptima,
            square(-5.0, 5.0),
            0.0,
            vec![
                vec![3.0, 2.0],
                vec![-2.805_118_086_952_745, 3.131_312_518_250_573],
                vec![-3.779_310_253_377_747, -3.283_185_991_286_17],
                vec![3.584_428_340_330_492, -1.848_126_526_964_404],
            ],
            f::himmelblau,
        ),
        entry("booth", PlateShaped, square(-10.0, 10.0), 0.0, vec![vec![1.0, 3.0]], f::booth),
        entry("matyas", PlateShaped, square(-10.0, 10.0), 0.0, vec![vec![0.0, 0.0]], f::matyas),
        entry("mccormick", PlateShaped, vec![(-1.5, 4.0), (-3.0, 4.0)], -1.9133, vec![vec![-0.54719, -1.54719]], f::mccormick),
        entry("three_hump_camel", ValleyShaped, square(-5.0, 5.0), 0.0, vec![vec![0.0, 0.0]], f::three_hump_camel),
        entry(
            "six_hump_camel",
            ValleyShaped,
            vec![(-3.0, 3.0), (-2.0, 2.0)],
            -1.0316,
            vec![vec![0.0898, -0.7126], vec![-0.0898, 0.7126]],
            f::six_hump_camel,
        ),
        entry("rosenbrock", ValleyShaped, square(-5.0, 10.0), 0.0, vec![vec![1.0, 1.0]], f::rosenbrock),
        entry(
            "dixon_price",
            ValleyShaped,
            square(-10.0, 10.0),
            0.0,
            vec![vec![1.0, FRAC_1_SQRT_2], vec![1.0, -FRAC_1_SQRT_2]],
            f::dixon_price,
        ),
        entry("beale", Other, square(-4.5, 4.5), 0.0, vec![vec![3.0, 0.5]], f::beale),
        entry("goldstein_price", Other, square(-2.0, 2.0), 3.0, vec![vec![0.0, -1.0]], f::goldstein_price),
        entry("forrester", Other, square(0.0, 1.0), -12.0415, vec![vec![0.757_248_76, 0.757_248_76]], f::forrester),
        entry(
            "devilliers_glasser_02",
            Other,
            vec![(1.0, 60.0); 5],
            0.0,
            vec![f::DVG02_TRUE_PARAMS.to_vec()],
            f::devilliers_glasser_02,
        ),
        entry("sinusoidal", Demo, square(-10.0, 10.0), -2.0, vec![vec![-FRAC_PI_2, PI], vec![-FRAC_PI_2, -PI]], f::sinusoidal),
        entry("sinusoidal_alt", Demo, square(-10.0, 10.0), -2.0, vec![vec![-FRAC_PI_2, -FRAC_PI_2]], f::sinusoidal_alt),
        entry("sphere", Demo, square(-10.0, 10.0), 0.0, vec![vec![0.0, 0.0]], f::sphere),
    ];
    for b in &mut out {
        match b.name {
            "schwefel" => b.optimum_tolerance = 3e-3,
            "sinusoidal" | "sinusoidal_alt" => b.extensible = true,
            "levy_n13" => b.note = Some("two-dimensional Levy N.13; also reachable as `levy`"),
            "devilliers_glasser_02" => {
                b.note = Some("the generating parameters lie outside the box in the fifth coordinate")
            }
            "forrester" => b.note = Some("one-dimensional Forrester summed over both coordinates"),
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_reports_dimension_and_bounds() {
        let r = registry().lookup("rastrigin").unwrap();
        assert_eq!(r.dimension(), 2);
        for iv in r.default_bounds.intervals() {
            assert_eq!((iv.low, iv.high), (-5.12, 5.12));
        }
        let e = registry().lookup("eggholder").unwrap();
        for iv in e.default_bounds.intervals() {
            assert_eq!((iv.low, iv.high), (-512.0, 512.0));
        }
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(
            registry().lookup("nosuchfn"),
            Err(Error::UnknownFunction(_))
        ));
        assert!(matches!(
            registry().evaluate("nosuchfn", &[0.0, 0.0]),
            Err(Error::UnknownFunction(_))
        ));
    }

    #[test]
    fn levy_alias_resolves() {
        assert_eq!(registry().lookup("levy").unwrap().name, "levy_n13");
    }

    #[test]
    fn evaluate_checks_dimension() {
        assert!(matches!(
            registry().evaluate("booth", &[1.0, 2.0, 3.0]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn category_listing() {
        let many = registry().list_functions(Some(Category::ManyLocalOptima));
        assert_eq!(many.len(), 11);
        assert_eq!(
            registry().list_functions(Some(Category::PlateShaped)),
            vec!["booth", "matyas", "mccormick"]
        );
        let all = registry().list_functions(None);
        assert!(all.len() >= 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            registry().list_by_category_name(Some("bowl")),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn sinusoidal_extends_but_rastrigin_does_not() {
        let s = registry().lookup("sinusoidal").unwrap().with_dimension(10).unwrap();
        assert_eq!(s.dimension(), 10);
        assert_eq!(s.evaluate(&[-FRAC_PI_2, PI, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap(), -2.0);
        assert!(registry().lookup("rastrigin").unwrap().with_dimension(3).is_err());
    }
}
