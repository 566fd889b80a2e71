//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Everything is bit-exact
//! integer/cyclotomic arithmetic.

use serde_json::json;

use rotation_ktheory::ktables::TableSet;
use rotation_ktheory::sequences::natsume_free;
use rotation_ktheory::verify::{run, Status, VerificationReport, WindowChoice};

fn tables() -> TableSet {
    TableSet::builtin().expect("shipped tables load and cross-check")
}

fn single(case: &str, window: WindowChoice) -> VerificationReport {
    let mut reports = run(case, window, &tables(), 0).expect("known case");
    assert_eq!(reports.len(), 1);
    reports.pop().unwrap()
}

fn criterion(n: usize, description: &str, pass: bool) {
    println!(
        "criterion {n}: {} — {description}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {description}");
}

#[test]
fn criterion_1_amalgamated_ranks() {
    let expected = [
        ("amalg:4,4;2", (13, 1)),
        ("amalg:4,6;2", (14, 1)),
        ("amalg:6,6;2", (16, 2)),
        ("amalg:6,6;3", (14, 2)),
    ];
    let mut ok = true;
    for (case, (k0, k1)) in expected {
        let r = single(case, WindowChoice::Both);
        ok &= r.pass;
        for w in ["low", "high"] {
            let c = r
                .claims
                .iter()
                .find(|c| c.id == format!("k_groups[{w}]"))
                .expect("k_groups claim");
            ok &= c.witness["k0_rank"] == json!(k0) && c.witness["k1_rank"] == json!(k1);
        }
    }
    criterion(
        1,
        "four amalgamated cases give (K0,K1) ranks (13,1) (14,1) (16,2) (14,2) in both windows",
        ok,
    );
}

#[test]
fn criterion_2_free_product_ranks() {
    let expected = [
        ((2, 2), 12),
        ((2, 3), 14),
        ((2, 4), 15),
        ((2, 6), 16),
        ((3, 3), 16),
        ((3, 4), 17),
        ((3, 6), 18),
        ((4, 4), 18),
        ((4, 6), 19),
        ((6, 6), 20),
    ];
    let t = tables();
    let mut ok = true;
    for w in [
        rotation_ktheory::ktables::ThetaWindow::Low,
        rotation_ktheory::ktables::ThetaWindow::High,
    ] {
        for ((m, n), k0) in expected {
            match natsume_free(m, n, &t, w) {
                Ok(r) => ok &= r.k0_rank == k0 && r.k1_rank == 0,
                Err(_) => ok = false,
            }
        }
    }
    criterion(
        2,
        "all free-product cases give the tabulated K0 ranks with K1 = 0",
        ok,
    );
}

#[test]
fn criterion_3_exact_sequence_structure() {
    let r = single("thm1.3", WindowChoice::Both);
    let mut ok = r.pass;
    for (map, expected) in [
        ("iota_star", [1, 6, 5, 4]),
        ("iota_prime_star", [2, 6, 4, 6]),
        ("kappa_star", [2, 8, 6, 4]),
    ] {
        for w in ["low", "high"] {
            let c = r
                .claims
                .iter()
                .find(|c| c.id == format!("{map}/ranks[{w}]"))
                .expect("ranks claim");
            let got = [
                &c.witness["kernel_rank"],
                &c.witness["source_rank"],
                &c.witness["image_rank"],
                &c.witness["cokernel_rank"],
            ];
            ok &= got.iter().zip(expected).all(|(g, e)| **g == json!(e));
            for kind in ["image_summand", "kernel_summand"] {
                let c = r
                    .claims
                    .iter()
                    .find(|c| c.id == format!("{map}/{kind}[{w}]"))
                    .expect("summand claim");
                ok &= c.status == Status::Pass;
            }
        }
    }
    criterion(
        3,
        "induced-map ranks (1,6,5,4) (2,6,4,6) (2,8,6,4) with summand and unimodular completion witnesses",
        ok,
    );
}

#[test]
fn criterion_4_unit_and_rieffel_classes() {
    let r = single("thm1.4", WindowChoice::Both);
    let mut ok = r.pass;
    for n in [2, 3, 4, 6] {
        for w in ["low", "high"] {
            for kind in ["coefficients", "rank2_summand"] {
                let c = r
                    .claims
                    .iter()
                    .find(|c| c.id == format!("n{n}/{kind}[{w}]"))
                    .expect("claim present");
                ok &= c.status == Status::Pass;
            }
        }
    }
    criterion(
        4,
        "unit and Rieffel classes span rank-2 direct summands with the printed coefficients for n = 2, 3, 4, 6",
        ok,
    );
}

#[test]
fn criterion_5_printed_combination_ledger() {
    let r = single("thm1.3", WindowChoice::Both);
    let mut ok = true;
    let ledger_ids: Vec<String> = ["low", "high"]
        .iter()
        .flat_map(|w| {
            [
                format!("iota_star/printed_rows[{w}]"),
                format!("iota_prime_star/printed_rows[{w}]"),
                format!("kappa_star/printed_rows[{w}]"),
                format!("eliminate_eta9[{w}]"),
                format!("eliminate_eta8[{w}]"),
                format!("xi1_prime_after_elimination[{w}]"),
                format!("xi3_prime_after_elimination[{w}]"),
            ]
        })
        .collect();
    for id in &ledger_ids {
        let c = r
            .claims
            .iter()
            .find(|c| &c.id == id)
            .unwrap_or_else(|| panic!("ledger claim {id} present"));
        ok &= c.status == Status::Pass;
    }
    criterion(
        5,
        "every printed integral combination is reproduced by the integral solver with the printed coefficients",
        ok,
    );
}

#[test]
fn criterion_6_identity_suite() {
    let r = single("identities", WindowChoice::Both);
    let mut ok = r.pass;
    for c in &r.claims {
        ok &= c.witness["monomials"] == json!(1681) && c.witness["failures"] == json!(0);
    }
    criterion(
        6,
        "functional and automorphism identities hold on all 1681 monomials with |m|, |n| <= 20",
        ok,
    );
}

#[test]
fn criterion_7_lattice_oracle() {
    let r = single("lattice-oracle", WindowChoice::Both);
    let mut ok = r.pass;
    for c in &r.claims {
        ok &= c.witness["failures"] == json!(0);
        if c.id != "summand_matches_brute_force" {
            ok &= c.witness["matrices"] == json!(200);
        }
    }
    criterion(
        7,
        "normal forms, kernels, and summand tests agree with brute-force oracles on 200 seeded random matrices",
        ok,
    );
}

#[test]
fn criterion_8_window_invariance() {
    let mut ok = true;
    for case in [
        "amalg:4,4;2",
        "amalg:4,6;2",
        "amalg:6,6;2",
        "amalg:6,6;3",
        "free:2,2",
        "free:3,6",
        "free:6,6",
        "thm1.3",
        "thm1.4",
    ] {
        let r = single(case, WindowChoice::Both);
        let c = r
            .claims
            .iter()
            .find(|c| c.id == "window_invariance")
            .expect("invariance claim");
        ok &= c.status == Status::Pass;
    }
    criterion(
        8,
        "kernels, ranks, summand verdicts, and K-groups are identical for both theta windows",
        ok,
    );
}
