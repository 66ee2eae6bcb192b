//! Acceptance criteria, one line of output per criterion. Runs with a
//! custom harness so the summary lines are always printed.

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use krull_core::ideal::{field_quotient_oracle, refute_principal_maximality, Contraction, Refutation, Status};
use krull_core::lab::{
    jacobson_witness, random_poly, unit_gadget, verify_theorem, VerificationReport, VerifyConfig,
};
use krull_core::rng::SeededRng;
use krull_core::poly::parse_poly;
use krull_core::{Elem, IdealAx, IrreducibleStream, Poly, Ring};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_rings() -> [Ring; 5] {
    [Ring::Integers, Ring::Gaussian, Ring::FiniteFieldPoly(5), Ring::Localized(2), Ring::Rationals]
}

fn criterion_1() -> Outcome {
    let zz = Ring::Integers;
    let d = parse_poly(zz, "x^2+1").unwrap().pseudo_divide(&parse_poly(zz, "2x+1").unwrap()).unwrap();
    let worked = (d.multiplier.to_string(), d.quotient.to_string(), d.remainder.to_string());
    ensure(worked == ("4".into(), "2x-1".into(), "5".into()), || format!("worked instance gave {worked:?}"))?;
    let mut rng = SeededRng::new(1);
    for ring in all_rings() {
        for _ in 0..1000 {
            let df = rng.below(9) as usize;
            let f = random_poly(ring, &mut rng, df, 1_000_000);
            let g = loop {
                let dg = rng.below(9) as usize;
                let g = random_poly(ring, &mut rng, dg, 1_000_000);
                if !g.is_zero() {
                    break g;
                }
            };
            let d = f.pseudo_divide(&g).map_err(|e| format!("{ring}: {e}"))?;
            let lhs = f.scale(&d.multiplier);
            let rhs = &(&g * &d.quotient) + &d.remainder;
            ensure(lhs == rhs, || format!("{ring}: identity fails for f={f} g={g}"))?;
            ensure(d.remainder.is_zero() || d.remainder.degree() < g.degree(), || {
                format!("{ring}: remainder degree for f={f} g={g}")
            })?;
        }
    }
    Ok("5000 pairs over 5 rings, worked instance (4, 2x-1, 5)".into())
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let mut maximal = 0;
    for p in [2i64, 3, 5, 7] {
        let prime = Elem::from_i64(Ring::Integers, p);
        for degree in 1..=3u32 {
            let count = (p - 1) * p.pow(degree);
            for index in 0..count {
                let mut rest = index;
                let mut coeffs: Vec<i64> = (0..degree)
                    .map(|_| {
                        let c = rest % p;
                        rest /= p;
                        c
                    })
                    .collect();
                coeffs.push(1 + rest);
                let g = Poly::from_i64s(Ring::Integers, &coeffs);
                let engine = IdealAx::pair(&prime, &g).map_err(|e| e.to_string())?.classify().status == Status::Maximal;
                let oracle = field_quotient_oracle(&prime, &g).map_err(|e| e.to_string())?;
                ensure(engine == oracle, || format!("disagreement at ({p}, {g}): engine {engine}, oracle {oracle}"))?;
                checked += 1;
                maximal += usize::from(oracle);
            }
        }
    }
    Ok(format!("{checked} ideals, {maximal} maximal, 0 disagreements"))
}

fn acceptance_config(ring: Ring) -> VerifyConfig {
    VerifyConfig { ring, budget: 50, samples: 100, trials: 50, seed: 42 }
}

fn criterion_3() -> Outcome {
    for ring in [Ring::Integers, Ring::Gaussian, Ring::FiniteFieldPoly(5)] {
        let r = verify_theorem(acceptance_config(ring)).map_err(|e| format!("{ring}: {e}"))?;
        ensure(r.theorem_consistent, || format!("{ring}: theorem_consistent=false"))?;
        ensure((r.census.kind.as_str(), r.census.count) == ("AT_LEAST", 50), || format!("{ring}: census"))?;
        ensure(r.maximal_samples.len() == 100, || format!("{ring}: sample count"))?;
        ensure(r.maximal_samples.iter().all(|s| s.status == "MAXIMAL" && s.height == Some(2)), || {
            format!("{ring}: a maximal sample is not at height 2")
        })?;
        ensure(r.height1_witness.is_none(), || format!("{ring}: unexpected height-1 witness"))?;
    }
    Ok("ZZ, ZZ[i], GF(5)[t]: AT_LEAST(50), 100 samples each at height 2".into())
}

fn criterion_4() -> Outcome {
    let cases = [(Ring::Localized(2), 1, "(2x-1)"), (Ring::Localized(5), 1, "(5x-1)"), (Ring::Rationals, 0, "(x)")];
    for (ring, count, witness) in cases {
        let r: VerificationReport = verify_theorem(acceptance_config(ring)).map_err(|e| format!("{ring}: {e}"))?;
        ensure(r.theorem_consistent, || format!("{ring}: theorem_consistent=false"))?;
        ensure((r.census.kind.as_str(), r.census.count) == ("FINITE", count), || format!("{ring}: census"))?;
        let w = r.height1_witness.ok_or_else(|| format!("{ring}: no height-1 witness"))?;
        ensure(w.ideal == witness && w.status == "MAXIMAL" && w.height == Some(1), || {
            format!("{ring}: witness {} {} {:?}", w.ideal, w.status, w.height)
        })?;
        let ideal = krull_core::parse_ideal(ring, &w.ideal).map_err(|e| e.to_string())?;
        ensure(ideal.contract() == Ok(Contraction::ZeroIdeal), || format!("{ring}: contraction is not zero"))?;
    }
    Ok("Zloc(2) (2x-1), Zloc(5) (5x-1), QQ (x): height 1, zero contraction".into())
}

fn criterion_5() -> Outcome {
    let mut rng = SeededRng::new(5);
    for ring in all_rings() {
        for _ in 0..50 {
            let f = loop {
                let degree = rng.below(4) as usize;
                let f = random_poly(ring, &mut rng, degree, 1000);
                if !f.is_zero() {
                    break f;
                }
            };
            let m = jacobson_witness(ring, &f).map_err(|e| format!("{ring}: {e}"))?;
            ensure(m.classify().status == Status::Maximal, || format!("{ring}: {m} is not maximal"))?;
            ensure(!m.member(&f).unwrap(), || format!("{ring}: {f} lies in {m}"))?;
            if let krull_core::ideal::Shape::Pair(p, g) = m.shape() {
                if let Ok(field) = field_quotient_oracle(p, g) {
                    ensure(field, || format!("{ring}: oracle rejects {m}"))?;
                }
            }
        }
    }
    let mut gadgets = 0;
    for i in 0..1000 {
        let ring = all_rings()[i % 5];
        let f = if i % 50 == 0 {
            Poly::zero(ring)
        } else {
            let degree = rng.below(4) as usize;
            random_poly(ring, &mut rng, degree, 3)
        };
        ensure(unit_gadget(&f) == f.is_zero(), || format!("{ring}: gadget wrong for {f}"))?;
        gadgets += 1;
    }
    Ok(format!("250 Jacobson witnesses verified, {gadgets} gadget inputs"))
}

fn distinct_prime_factors(mut n: u64) -> usize {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            count += 1;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    count + usize::from(n > 1)
}

fn criterion_6() -> Outcome {
    let zz = Ring::Integers;
    let mut rng = SeededRng::new(6);
    let mut max_steps = 0;
    for _ in 0..100 {
        let degree = 1 + rng.below(3) as usize;
        let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.signed(10_000)).collect();
        let lead = loop {
            let c = rng.signed(10_000);
            if c != 0 {
                break c;
            }
        };
        coeffs.push(lead);
        let content = coeffs.iter().fold(0i64, |a, &c| num_integer::gcd(a, c));
        let coeffs: Vec<i64> = coeffs.iter().map(|c| c / content).collect();
        let g = Poly::from_i64s(zz, &coeffs);
        let omega = distinct_prime_factors(coeffs[degree].unsigned_abs());
        match refute_principal_maximality(&g).map_err(|e| format!("{g}: {e}"))? {
            Refutation::Witness { p, steps } => {
                ensure(steps <= omega + 1, || format!("{g}: {steps} steps > omega+1 = {}", omega + 1))?;
                let prime = p.to_string().parse::<i64>().unwrap();
                ensure(coeffs[1..].iter().any(|c| c % prime != 0), || format!("{g}: constant mod {prime}"))?;
                let pair = IdealAx::pair(&p, &g).map_err(|e| e.to_string())?;
                ensure(!pair.member(&Poly::one(zz)).unwrap(), || format!("({g}, {prime}) is not proper"))?;
                max_steps = max_steps.max(steps);
            }
            other => return Err(format!("{g}: {other:?}")),
        }
    }
    Ok(format!("100 witnesses, at most {max_steps} stream steps"))
}

fn gaussian_canonical(mut a: i64, mut b: i64) -> (i64, i64) {
    while !(a > 0 && b >= 0) {
        (a, b) = (-b, a);
    }
    (a, b)
}

fn gaussian_irreducible(a: i64, b: i64) -> bool {
    let n = a * a + b * b;
    if n <= 1 {
        return false;
    }
    let r = (n as f64).sqrt() as i64 + 1;
    for c in -r..=r {
        for d in -r..=r {
            let m = c * c + d * d;
            if m <= 1 || m >= n || n % m != 0 {
                continue;
            }
            // (a+bi)/(c+di) = (a+bi)(c-di)/m
            if (a * c + b * d) % m == 0 && (b * c - a * d) % m == 0 {
                return false;
            }
        }
    }
    true
}

fn gf2_divides(d: u32, mut a: u32) -> bool {
    let dd = 31 - d.leading_zeros();
    while a != 0 && 31 - a.leading_zeros() >= dd {
        a ^= d << (31 - a.leading_zeros() - dd);
    }
    a == 0
}

fn criterion_7() -> Outcome {
    let primes: Vec<i64> = (2i64..).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)).take(50).collect();
    let zz: Vec<Elem> = IrreducibleStream::new(Ring::Integers).take(50).collect();
    let zz_text: Vec<String> = zz.iter().map(|e| e.to_string()).collect();
    let expected: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
    ensure(zz_text == expected, || format!("ZZ stream {zz_text:?}"))?;

    let mut gauss: Vec<(i64, i64, i64)> = Vec::new();
    let mut seen = HashSet::new();
    for a in -12i64..=12 {
        for b in -12i64..=12 {
            if (a, b) == (0, 0) {
                continue;
            }
            let (c, d) = gaussian_canonical(a, b);
            if seen.insert((c, d)) && gaussian_irreducible(c, d) {
                gauss.push((c * c + d * d, c, d));
            }
        }
    }
    gauss.sort();
    let expected: Vec<(i64, i64)> = gauss.iter().take(20).map(|&(_, a, b)| (a, b)).collect();
    let got: Vec<(i64, i64)> = IrreducibleStream::new(Ring::Gaussian)
        .take(20)
        .map(|e| {
            let (a, b) = e.as_gaussian().unwrap();
            (a.to_string().parse().unwrap(), b.to_string().parse().unwrap())
        })
        .collect();
    ensure(got == expected, || format!("ZZ[i] stream {got:?} expected {expected:?}"))?;

    let expected: Vec<u32> = (2u32..)
        .filter(|&f| (2..f).filter(|&d| 31 - d.leading_zeros() < 31 - f.leading_zeros()).all(|d| !gf2_divides(d, f)))
        .take(20)
        .collect();
    let got: Vec<u32> = IrreducibleStream::new(Ring::FiniteFieldPoly(2))
        .take(20)
        .map(|e| e.as_fp_poly().unwrap().iter().rev().fold(0u32, |acc, &c| (acc << 1) | c as u32))
        .collect();
    ensure(got == expected, || format!("GF(2)[t] stream {got:?} expected {expected:?}"))?;

    let gf2: Vec<Elem> = IrreducibleStream::new(Ring::FiniteFieldPoly(2)).take(20).collect();
    let gi: Vec<Elem> = IrreducibleStream::new(Ring::Gaussian).take(20).collect();
    for list in [&zz, &gi, &gf2] {
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                ensure(!a.is_associate(b), || format!("{a} and {b} are associates"))?;
            }
        }
    }
    Ok("50 of ZZ, 20 of ZZ[i], 20 of GF(2)[t] match brute force; pairwise nonassociate".into())
}

fn criterion_8() -> Outcome {
    let args = ["verify", "--ring", "ZZ", "--budget", "50", "--samples", "100", "--trials", "50", "--seed", "42", "--format", "json"];
    let run = || Command::new(env!("CARGO_BIN_EXE_krull")).args(args).output().map_err(|e| e.to_string());
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || "verify exited with failure".into())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    ensure(!a.stdout.is_empty(), || "empty output".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("pseudo-division contract", criterion_1),
        ("maximality oracle equivalence", criterion_2),
        ("infinitely many irreducibles: heights 2", criterion_3),
        ("finitely many irreducibles: height-1 witness", criterion_4),
        ("Jacobson radical is zero", criterion_5),
        ("refutation soundness", criterion_6),
        ("irreducible enumeration", criterion_7),
        ("deterministic reports", criterion_8),
    ];
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        if !selected.is_empty() && !selected.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
