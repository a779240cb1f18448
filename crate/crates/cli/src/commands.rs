//! One function per subcommand; each returns a [`Report`] in both encodings.

use num_bigint::BigInt;
use quiverkac_core::fforacle::{count_absolutely_indecomposable, count_all_iso_classes};
use quiverkac_core::kac::kac_polynomials;
use quiverkac_core::series::DimBox;
use quiverkac_core::{
    character_level_one, euler_characteristic, is_real_root, kac_polynomial, peterson, poincare_via_hausel,
    poincare_via_kac, weight_mult_freudenthal, weight_mult_level_one, weight_mult_via_betti, BettiProfile, DimVector,
    HighestWeight, KacPolynomial, Quiver,
};
use serde::Serialize;

use crate::formats::{cell, entries, int_strings, RationalJson, Report};
use crate::{BettiArgs, BettiMethod, CliError, Command, OracleCommand, Outcome, WeightMethod};

pub fn dispatch(q: &Quiver, command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Kac(args) => match (&args.target.dim, &args.target.all_upto) {
            (Some(alpha), _) => kac_single(q, alpha).map(Outcome::from),
            (_, Some(bound)) => kac_sweep(q, bound).map(Outcome::from),
            _ => Err(CliError::Usage("kac needs --dim or --all-upto".into())),
        },
        Command::Roots { bound } => roots(q, bound).map(Outcome::from),
        Command::Weightmult { hw, drop, method } => weightmult(q, hw, drop, *method),
        Command::Character { hw, bound } => character(q, hw, bound).map(Outcome::from),
        Command::Betti(args) => betti(q, args),
        Command::Oracle(OracleCommand::AiCount { dim, p }) => ai_count(q, dim, *p),
        Command::Selftest => Ok(crate::selftest::run()),
    }
}

#[derive(Serialize)]
struct KacJson {
    alpha: Vec<u32>,
    polynomial: RationalJson,
}

impl KacJson {
    fn of(k: &KacPolynomial) -> Self {
        KacJson { alpha: entries(&k.alpha), polynomial: RationalJson::of_poly(&k.poly) }
    }

    fn row(&self) -> Vec<String> {
        vec![cell(&self.alpha), cell(&self.polynomial.num), cell(&self.polynomial.den)]
    }
}

const KAC_HEADER: [&str; 3] = ["alpha", "num", "den"];

fn kac_single(q: &Quiver, alpha: &DimVector) -> Result<Report, CliError> {
    let k = KacJson::of(&kac_polynomial(q, alpha, &DimBox::new(alpha.clone()))?);
    let row = k.row();
    Ok(Report::new(&k, KAC_HEADER.to_vec(), vec![row]))
}

fn kac_sweep(q: &Quiver, bound: &DimVector) -> Result<Report, CliError> {
    q.check_dim(bound)?;
    #[derive(Serialize)]
    struct Sweep {
        bound: Vec<u32>,
        polynomials: Vec<KacJson>,
    }
    let polynomials: Vec<KacJson> = kac_polynomials(q, &DimBox::new(bound.clone()))?.iter().map(KacJson::of).collect();
    let rows = polynomials.iter().map(KacJson::row).collect();
    Ok(Report::new(&Sweep { bound: entries(bound), polynomials }, KAC_HEADER.to_vec(), rows))
}

fn roots(q: &Quiver, bound: &DimVector) -> Result<Report, CliError> {
    #[derive(Serialize)]
    struct Root {
        alpha: Vec<u32>,
        mult: u64,
        real: bool,
    }
    #[derive(Serialize)]
    struct Roots {
        bound: Vec<u32>,
        roots: Vec<Root>,
    }
    let table = peterson(q, bound)?;
    let mut list = Vec::new();
    for (alpha, mult) in table.roots() {
        let real = is_real_root(q, &alpha, &table)?;
        list.push(Root { alpha: entries(&alpha), mult, real });
    }
    let rows = list.iter().map(|r| vec![cell(&r.alpha), r.mult.to_string(), r.real.to_string()]).collect();
    Ok(Report::new(&Roots { bound: entries(bound), roots: list }, vec!["alpha", "mult", "real"], rows))
}

fn weightmult(q: &Quiver, hw: &DimVector, drop: &DimVector, method: WeightMethod) -> Result<Outcome, CliError> {
    #[derive(Serialize)]
    struct WeightJson {
        hw: Vec<u32>,
        drop: Vec<u32>,
        method: &'static str,
        #[serde(skip_serializing_if = "Option::is_none")]
        theorem1: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        freudenthal: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        multiplicity: Option<u64>,
        methods_agree: bool,
    }
    q.check_dim(hw)?;
    let weight = HighestWeight(hw.clone());
    let theorem1 = match method {
        WeightMethod::Freudenthal => None,
        _ => Some(weight_mult_level_one(q, &weight, drop, drop)?),
    };
    let freudenthal = match method {
        WeightMethod::LevelOne => None,
        _ => {
            let roots = peterson(q, drop)?;
            Some(weight_mult_freudenthal(q, &weight, drop, &roots)?.mult(drop).expect("drop is the bound"))
        }
    };
    let agree = theorem1.is_none() || freudenthal.is_none() || theorem1 == freudenthal;
    let multiplicity = if agree { theorem1.or(freudenthal) } else { None };
    let name = match method {
        WeightMethod::LevelOne => "theorem1",
        WeightMethod::Freudenthal => "freudenthal",
        WeightMethod::Both => "both",
    };
    let json = WeightJson {
        hw: entries(hw),
        drop: entries(drop),
        method: name,
        theorem1,
        freudenthal,
        multiplicity,
        methods_agree: agree,
    };
    let mut rows = Vec::new();
    for (label, value) in [("theorem1", theorem1), ("freudenthal", freudenthal)] {
        if let Some(m) = value {
            rows.push(vec![cell(&json.hw), cell(&json.drop), label.to_string(), m.to_string()]);
        }
    }
    let report = Report::new(&json, vec!["hw", "drop", "method", "multiplicity"], rows);
    let failure = (!agree).then(|| {
        CliError::Internal(format!("theorem1 gives {theorem1:?} but freudenthal gives {freudenthal:?} at drop {drop}"))
    });
    Ok(Outcome { report, failure })
}

fn character(q: &Quiver, hw: &DimVector, bound: &DimVector) -> Result<Report, CliError> {
    #[derive(Serialize)]
    struct Weight {
        drop: Vec<u32>,
        mult: u64,
    }
    #[derive(Serialize)]
    struct Character {
        hw: Vec<u32>,
        bound: Vec<u32>,
        weights: Vec<Weight>,
    }
    q.check_dim(hw)?;
    let table = character_level_one(q, &HighestWeight(hw.clone()), bound)?;
    let weights: Vec<Weight> =
        table.entries().filter(|(_, m)| *m > 0).map(|(b, mult)| Weight { drop: entries(&b), mult }).collect();
    let rows = weights.iter().map(|w| vec![cell(&w.drop), w.mult.to_string()]).collect();
    Ok(Report::new(&Character { hw: entries(hw), bound: entries(bound), weights }, vec!["drop", "mult"], rows))
}

#[derive(Serialize)]
struct BettiJson {
    v: Vec<u32>,
    w: Vec<u32>,
    d: i64,
    method: &'static str,
    /// Coefficients of `p(M, q)`, ascending; empty for an empty variety.
    p: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p_hausel: Option<Vec<String>>,
    betti: Vec<BettiNumber>,
    euler_characteristic: String,
    weight_multiplicity: String,
    empty: bool,
    methods_agree: bool,
}

#[derive(Serialize)]
struct BettiNumber {
    degree: u32,
    dim: String,
}

impl BettiJson {
    fn new(profile: &BettiProfile, method: &'static str, other: Option<&BettiProfile>) -> Self {
        let agree = other.is_none_or(|o| o == profile);
        BettiJson {
            v: entries(&profile.alpha),
            w: entries(&profile.lambda),
            d: profile.d,
            method,
            p: int_strings(profile.p.coeffs()),
            p_hausel: other.filter(|_| !agree).map(|o| int_strings(o.p.coeffs())),
            betti: profile
                .betti()
                .into_iter()
                .map(|(degree, dim)| BettiNumber { degree, dim: dim.to_string() })
                .collect(),
            euler_characteristic: euler_characteristic(profile).to_string(),
            weight_multiplicity: weight_mult_via_betti(profile).to_string(),
            empty: profile.is_empty(),
            methods_agree: agree,
        }
    }

    fn row(&self) -> Vec<String> {
        vec![
            cell(&self.v),
            cell(&self.w),
            self.d.to_string(),
            self.method.to_string(),
            cell(&self.p),
            self.euler_characteristic.clone(),
            self.weight_multiplicity.clone(),
            self.empty.to_string(),
        ]
    }
}

const BETTI_HEADER: [&str; 8] = ["v", "w", "d", "method", "p", "euler_characteristic", "weight_multiplicity", "empty"];

fn betti(q: &Quiver, args: &BettiArgs) -> Result<Outcome, CliError> {
    q.check_dim(&args.w)?;
    let bound = args.bound.clone().or_else(|| args.v.clone()).expect("clap requires --v or --bound");
    q.check_dim(&bound)?;
    let dom = DimBox::new(bound.clone());
    let targets: Vec<DimVector> = match &args.v {
        Some(v) => {
            q.check_dim(v)?;
            if !v.le(&bound) {
                return Err(CliError::Domain(format!("--bound {bound} does not contain --v {v}")));
            }
            vec![v.clone()]
        }
        None => dom.iter().collect(),
    };
    let hausel = match args.method {
        BettiMethod::Kac => None,
        _ => Some(poincare_via_hausel(q, &args.w, &dom)?),
    };
    let method = match args.method {
        BettiMethod::Kac => "kac",
        BettiMethod::Hausel => "hausel",
        BettiMethod::Both => "both",
    };
    let mut profiles = Vec::new();
    let mut disagreements = Vec::new();
    for v in &targets {
        let from_hausel = hausel.as_ref().map(|h| h[v].clone());
        let json = match args.method {
            BettiMethod::Hausel => BettiJson::new(from_hausel.as_ref().expect("computed"), method, None),
            _ => {
                let kac = poincare_via_kac(q, v, &args.w, &DimBox::new(v.clone()))?;
                BettiJson::new(&kac, method, from_hausel.as_ref())
            }
        };
        if !json.methods_agree {
            disagreements.push(v.to_string());
        }
        profiles.push(json);
    }
    let rows = profiles.iter().map(BettiJson::row).collect();
    let report = match &args.v {
        Some(_) => Report::new(&profiles[0], BETTI_HEADER.to_vec(), rows),
        None => {
            #[derive(Serialize)]
            struct Sweep {
                w: Vec<u32>,
                bound: Vec<u32>,
                profiles: Vec<BettiJson>,
            }
            Report::new(&Sweep { w: entries(&args.w), bound: entries(&bound), profiles }, BETTI_HEADER.to_vec(), rows)
        }
    };
    let failure = (!disagreements.is_empty())
        .then(|| CliError::Internal(format!("kac and hausel profiles differ at v = {}", disagreements.join(", "))));
    Ok(Outcome { report, failure })
}

fn ai_count(q: &Quiver, alpha: &DimVector, p: u32) -> Result<Outcome, CliError> {
    #[derive(Serialize)]
    struct Count {
        alpha: Vec<u32>,
        p: u32,
        count: u64,
        iso_classes: u64,
        kac_value: String,
        matches_kac: bool,
    }
    let count = count_absolutely_indecomposable(q, alpha, p)?;
    let iso_classes = count_all_iso_classes(q, alpha, p)?;
    let kac = kac_polynomial(q, alpha, &DimBox::new(alpha.clone()))?;
    let kac_value = kac.poly.eval_int(&BigInt::from(p));
    let matches = kac_value == BigInt::from(count);
    let json =
        Count { alpha: entries(alpha), p, count, iso_classes, kac_value: kac_value.to_string(), matches_kac: matches };
    let row = vec![
        cell(&json.alpha),
        p.to_string(),
        count.to_string(),
        iso_classes.to_string(),
        json.kac_value.clone(),
        matches.to_string(),
    ];
    let report = Report::new(&json, vec!["alpha", "p", "count", "iso_classes", "kac_value", "matches_kac"], vec![row]);
    let failure = (!matches).then(|| {
        CliError::Internal(format!("{count} absolutely indecomposables over F_{p}, but a_α({p}) = {kac_value}"))
    });
    Ok(Outcome { report, failure })
}
