// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

mod common;

use common::{long_path_instance, random_instance, scan_missing};
use nearviz::chains::walk_path;
use nearviz::rng::seeded;
use nearviz::verify::{naive_make_fan, naive_vizing_chain, NaiveChainOutcome, NaiveFanOutcome};
use nearviz::{
    augment, flip_path, make_fan, shift_fan, verify_proper, vizing_chain, AugmentCase,
    ChainFailure, ChainOutcome, FanOutcome, PartialColoring, BLANK,
};
use rand::Rng;

#[test]
fn fast_fan_and_chain_match_naive_transcription() {
    let mut rng = seeded(20_240);
    let mut built = 0;
    let mut nontrivial = 0;
    let mut fails = 0;
    for _ in 0..1000 {
        let inst = random_instance(30, &mut rng);
        let c = inst.coloring();
        let cap = rng.random_range(1..=12);
        let fast = make_fan(&c, inst.edge, inst.pivot, &inst.palette).unwrap();
        let slow = naive_make_fan(
            &inst.graph,
            &inst.colors,
            inst.edge,
            inst.pivot,
            &inst.palette,
        );
        match (&fast, &slow) {
            (FanOutcome::Fail, NaiveFanOutcome::Fail) => fails += 1,
            (FanOutcome::Built(f), NaiveFanOutcome::Built(s)) => {
                assert_eq!(
                    (f.fan.pivot, &f.fan.leaves, f.alpha, f.j),
                    (s.pivot, &s.leaves, s.alpha, s.j)
                );
                built += 1;
                if f.j < f.fan.len() {
                    nontrivial += 1;
                }
            }
            _ => panic!("fan outcome mismatch: {fast:?} vs {slow:?}"),
        }

        let fast = vizing_chain(&c, inst.edge, inst.pivot, &inst.palette, cap).unwrap();
        let slow = naive_vizing_chain(
            &inst.graph,
            &inst.colors,
            inst.edge,
            inst.pivot,
            &inst.palette,
            cap,
        );
        match (&fast, &slow) {
            (ChainOutcome::Fail(ChainFailure::Fan), NaiveChainOutcome::FailFan)
            | (ChainOutcome::Fail(ChainFailure::Beta), NaiveChainOutcome::FailBeta) => {}
            (ChainOutcome::Built(f), NaiveChainOutcome::Built(s)) => {
                assert_eq!(f.fan.leaves, s.fan.leaves);
                assert_eq!((f.alpha, f.j), (s.fan.alpha, s.fan.j));
                assert_eq!(f.path.vertices, s.path);
            }
            _ => panic!("chain outcome mismatch: {fast:?} vs {slow:?}"),
        }
    }
    // The sweep must exercise every branch.
    assert!(
        built > 100 && nontrivial > 50 && fails > 10,
        "{built} {nontrivial} {fails}"
    );
}

#[test]
fn fan_output_color_missing_at_both_leaves() {
    let mut rng = seeded(77);
    for _ in 0..1000 {
        let inst = random_instance(30, &mut rng);
        let c = inst.coloring();
        if let FanOutcome::Built(r) = make_fan(&c, inst.edge, inst.pivot, &inst.palette).unwrap() {
            let k = r.fan.len();
            assert!(r.j >= 1 && r.j <= k);
            assert!(k <= inst.palette.len() + 1);
            assert!(inst.palette.contains(&r.alpha));
            assert!(scan_missing(
                &inst.graph,
                &inst.colors,
                r.fan.leaves[k - 1],
                r.alpha
            ));
            assert!(scan_missing(
                &inst.graph,
                &inst.colors,
                r.fan.leaves[r.j - 1],
                r.alpha
            ));
            assert!(r.fan.is_valid(&c));
        }
    }
}

#[test]
fn chain_path_capped_and_rooted_at_pivot() {
    let mut rng = seeded(78);
    for _ in 0..1000 {
        let inst = random_instance(30, &mut rng);
        let c = inst.coloring();
        let cap = rng.random_range(1..=6);
        if let ChainOutcome::Built(ch) =
            vizing_chain(&c, inst.edge, inst.pivot, &inst.palette, cap).unwrap()
        {
            assert_eq!(ch.path.start(), inst.pivot);
            assert!(ch.path.len() <= cap);
            assert!(ch.path.is_valid(&c));
            if ch.path.is_empty() {
                assert_eq!(ch.j, ch.fan.len());
            } else {
                assert_eq!(ch.path.vertices[1], ch.fan.leaves[ch.j]);
                assert!(ch.path.len() == cap || ch.path.is_maximal(&c));
            }
        }
    }
}

#[test]
fn shifting_random_fans_stays_proper() {
    let mut rng = seeded(5);
    let mut checked = 0;
    while checked < 1000 {
        let inst = random_instance(30, &mut rng);
        let mut c = inst.coloring();
        let FanOutcome::Built(r) = make_fan(&c, inst.edge, inst.pivot, &inst.palette).unwrap()
        else {
            continue;
        };
        // Any prefix of a fan is a fan.
        let fan = r.fan.prefix(rng.random_range(1..=r.fan.len()));
        let before = c.colors().to_vec();
        shift_fan(&mut c, &fan).unwrap();
        assert_eq!(verify_proper(&inst.graph, c.colors(), false), Ok(()));
        assert!(c.index_consistent());
        let k = fan.len();
        for i in 0..k - 1 {
            assert_eq!(
                c.colors()[fan.edges[i] as usize],
                before[fan.edges[i + 1] as usize]
            );
        }
        assert_eq!(c.colors()[fan.edges[k - 1] as usize], BLANK);
        checked += 1;
    }
}

#[test]
fn flipping_random_maximal_paths_stays_proper_and_is_an_involution() {
    let mut rng = seeded(6);
    let mut checked = 0;
    while checked < 1000 {
        let inst = random_instance(30, &mut rng);
        let mut c = inst.coloring();
        let g = &inst.graph;
        let x = rng.random_range(0..g.vertex_count() as u32);
        let q = inst.q;
        let a = rng.random_range(1..=q);
        let b = rng.random_range(1..=q);
        // A maximal path starts where the second color is missing.
        if a == b || !c.is_missing(x, b) {
            continue;
        }
        let path = walk_path(&c, x, a, b, usize::MAX);
        assert!(path.is_maximal(&c));
        let before = c.colors().to_vec();
        flip_path(&mut c, &path).unwrap();
        assert_eq!(verify_proper(g, c.colors(), false), Ok(()));
        assert!(c.index_consistent());
        for (i, &e) in path.edges.iter().enumerate() {
            let expect = if i % 2 == 0 { b } else { a };
            assert_eq!(c.colors()[e as usize], expect);
        }
        if !path.is_empty() {
            let back = walk_path(&c, x, b, a, usize::MAX);
            assert_eq!(back.edges, path.edges);
            flip_path(&mut c, &back).unwrap();
        }
        assert_eq!(c.colors(), &before[..]);
        checked += 1;
    }
}

#[test]
fn long_alternating_path_is_truncated_to_cap() {
    let cap = 10;
    let (g, colors) = long_path_instance(cap + 5);
    let c = PartialColoring::from_colors(&g, 4, &colors).unwrap();
    let ChainOutcome::Built(ch) = vizing_chain(&c, 0, 0, &[1, 2, 3], cap).unwrap() else {
        panic!("expected chain");
    };
    assert_eq!(ch.path.len(), cap);
    assert_eq!((ch.alpha, ch.path.beta, ch.j), (1, 3, 1));
    // Brute-force walk of the full maximal path.
    match naive_vizing_chain(&g, &colors, 0, 0, &[1, 2, 3], usize::MAX) {
        NaiveChainOutcome::Built(full) => {
            assert_eq!(full.path.len(), cap + 6);
            assert_eq!(&full.path[..=cap], &ch.path.vertices[..]);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn truncated_augmentations_flag_one_path_edge() {
    let mut rng = seeded(99);
    let mut checked = 0;
    let mut tries = 0;
    while checked < 1000 {
        tries += 1;
        assert!(tries < 200_000, "could not find enough long-path instances");
        let inst = random_instance(30, &mut rng);
        let mut c = inst.coloring();
        let cap = rng.random_range(1..=3);
        let ChainOutcome::Built(ch) =
            vizing_chain(&c, inst.edge, inst.pivot, &inst.palette, cap).unwrap()
        else {
            continue;
        };
        if ch.path.len() != cap {
            continue;
        }
        let colored_before = c.colored_count();
        let out = augment(&mut c, &ch, cap, &mut rng).unwrap();
        let flagged = out.flagged.expect("capped path must flag");
        assert!(ch.path.edges.contains(&flagged));
        assert!(matches!(out.case, AugmentCase::Long { .. }));
        assert_eq!(c.color(flagged), None);
        assert!(c.color(inst.edge).is_some());
        assert_eq!(c.colored_count(), colored_before);
        assert_eq!(verify_proper(&inst.graph, c.colors(), false), Ok(()));
        assert!(c.index_consistent());
        checked += 1;
    }
}

#[test]
fn augment_colors_exactly_the_chain_edge() {
    let mut rng = seeded(100);
    let mut cases = [0usize; 3];
    for _ in 0..2000 {
        let inst = random_instance(30, &mut rng);
        let mut c = inst.coloring();
        let cap = rng.random_range(1..=8);
        let ChainOutcome::Built(ch) =
            vizing_chain(&c, inst.edge, inst.pivot, &inst.palette, cap).unwrap()
        else {
            continue;
        };
        let blank_before: Vec<_> = (0..inst.colors.len())
            .filter(|&e| inst.colors[e] == BLANK)
            .collect();
        let out = augment(&mut c, &ch, cap, &mut rng).unwrap();
        assert_eq!(out.colored, inst.edge);
        assert_eq!(verify_proper(&inst.graph, c.colors(), false), Ok(()));
        // Blank set changes by: chain edge removed, flagged edge added.
        let mut expected: Vec<_> = blank_before
            .into_iter()
            .filter(|&e| e != inst.edge as usize)
            .collect();
        if let Some(f) = out.flagged {
            expected.push(f as usize);
            expected.sort_unstable();
        }
        let blank_after: Vec<_> = (0..c.colors().len())
            .filter(|&e| c.colors()[e] == BLANK)
            .collect();
        assert_eq!(blank_after, expected);
        cases[match out.case {
            AugmentCase::Happy => 0,
            AugmentCase::Short { .. } => 1,
            AugmentCase::Long { .. } => 2,
        }] += 1;
    }
    assert!(cases.iter().all(|&n| n > 20), "{cases:?}");
}
