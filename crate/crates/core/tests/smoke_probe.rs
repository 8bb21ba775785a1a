// Temporary probe for harness behavior on the corpus; will be replaced.
use std::sync::Arc;
use std::time::Instant;

use finring::corpus::{builtin_group, builtin_ring, Corpus, RingCorpus, DEFAULT_SEED};
use finring::harness::{
    check_group_ring_lift, check_group_ring_theorems, check_prop_annihilators,
    check_thm_fp_injective, check_thm_wqf,
};
use finring::properties::{self_injective, semisimple};
use finring::{Caps, Side};

#[test]
fn probe_baer_suite() {
    let caps = Caps::default();
    let t0 = Instant::now();
    for label in [
        "zmod2", "zmod3", "zmod4", "zmod6", "zmod8", "zmod9", "zmod12", "f4", "f2x2", "m2f2",
        "f2c2", "f2c3", "f3c3", "zmod4c2",
    ] {
        let r = builtin_ring(label, &caps).unwrap().unwrap();
        let t = Instant::now();
        let l = self_injective(&r, Side::Left, &caps).unwrap();
        let rr = self_injective(&r, Side::Right, &caps).unwrap();
        println!("{label}: left={} right={} ({:?})", l.value, rr.value, t.elapsed());
        assert!(l.value && rr.value, "{label}");
    }
    let tri = builtin_ring("tri2-f2", &caps).unwrap().unwrap();
    assert!(!self_injective(&tri, Side::Left, &caps).unwrap().value);
    assert!(!self_injective(&tri, Side::Right, &caps).unwrap().value);
    println!("baer suite total: {:?}", t0.elapsed());
}

#[test]
fn probe_theorems_on_key_rings() {
    let caps = Caps::default();
    for label in ["zmod4", "zmod6", "f2c2", "tri2-f2", "m2f2", "f2xf3", "f3c3"] {
        let ring = builtin_ring(label, &caps).unwrap().unwrap();
        let t = Instant::now();
        let rc = RingCorpus::build(&ring, &caps, DEFAULT_SEED).unwrap();
        let wqf = check_thm_wqf(&rc, &caps).unwrap();
        let fpinj = check_thm_fp_injective(&rc, &caps).unwrap();
        let ann = check_prop_annihilators(&ring, &caps).unwrap();
        println!(
            "{label} ({:?}): wqf agree={} fpinj agree={} ann agree={}",
            t.elapsed(),
            wqf.agreement,
            fpinj.agreement,
            ann.agreement
        );
        for c in &fpinj.conditions {
            println!("   fpinj {} = {:?}", c.name, c.value);
        }
        for w in wqf.witnesses.iter().chain(&fpinj.witnesses) {
            println!("   w: {w}");
        }
        assert!(wqf.agreement, "{label} wqf");
        assert!(fpinj.agreement, "{label} fpinj");
        assert!(ann.agreement, "{label} ann");
    }
}

#[test]
fn probe_group_ring_grid() {
    let caps = Caps::default();
    for (r, g) in [
        ("f2", "c2"),
        ("f2", "c3"),
        ("f2", "c2c2"),
        ("f3", "c3"),
        ("zmod4", "c2"),
        ("f4", "c2"),
        ("f4", "c2c2"),
        ("zmod4", "c2c2"),
        ("f2", "s3"),
    ] {
        let base = builtin_ring(r, &caps).unwrap().unwrap();
        let group = builtin_group(g).unwrap();
        let t = Instant::now();
        let rep = check_group_ring_theorems(&base, &group, &caps).unwrap();
        println!("{r}({g}) agree={} ({:?})", rep.agreement, t.elapsed());
        for c in &rep.conditions {
            println!("   {} = {:?}", c.name, c.value);
        }
        for w in &rep.witnesses {
            println!("   w: {w}");
        }
        assert!(rep.agreement, "{r}({g})");
        let t = Instant::now();
        let lift = check_group_ring_lift(&base, &group, &caps).unwrap();
        println!("  lift agree={} ({:?})", lift.agreement, t.elapsed());
        assert!(lift.agreement);
    }
}

#[test]
fn probe_semisimple_maschke_examples() {
    let caps = Caps::default();
    let f2c2 = builtin_ring("f2c2", &caps).unwrap().unwrap();
    assert!(!semisimple(&f2c2).value);
    let f2c3 = builtin_ring("f2c3", &caps).unwrap().unwrap();
    assert!(semisimple(&f2c3).value);
}

#[test]
fn probe_default_corpus_build_time() {
    let caps = Caps::default();
    let t = Instant::now();
    let corpus = Corpus::default_corpus(&caps, DEFAULT_SEED).unwrap();
    println!(
        "corpus build: {:?} ({} rings)",
        t.elapsed(),
        corpus.rings.len()
    );
    for rc in &corpus.rings {
        println!(
            "  {}: left {} modules {} monos, right {} modules {} monos",
            rc.ring.label(),
            rc.left.modules.len(),
            rc.left.monos.len(),
            rc.right.modules.len(),
            rc.right.monos.len()
        );
    }
    let t = Instant::now();
    let tri = builtin_ring("tri2-f2", &caps).unwrap().unwrap();
    let rc = RingCorpus::build(&tri, &caps, DEFAULT_SEED).unwrap();
    let rep = check_thm_fp_injective(&rc, &caps).unwrap();
    println!("tri2-f2 fpinj ({:?}):", t.elapsed());
    for c in &rep.conditions {
        println!("   {} = {:?}", c.name, c.value);
    }
    for w in &rep.witnesses {
        println!("   w: {w}");
    }
    assert!(rep.agreement);
}
