use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use proprep_cli::{parse_instance, ResultRecord};
use tempfile::TempDir;

const FIG: &str = "proprep v1\n4 3 1 0 cc sum borda\nc1\nc2\nc3\nc4\nc1 c2 c3 c4\nc2 c3 c4 c1\nc3 c2 c1 c4\n";
const SIX: &str = "proprep v1\n4 6 3 0 monroe sum borda\na\nb\nc\nd\n\
a b c d\na b c d\na b c d\na b c d\nc b a d\nc b a d\n";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn proprep(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_proprep")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Rank positions, `pos[v][c]`.
fn positions(votes: &[Vec<usize>], m: usize) -> Vec<Vec<u64>> {
    votes
        .iter()
        .map(|v| {
            let mut p = vec![0; m];
            for (i, &c) in v.iter().enumerate() {
                p[c] = i as u64;
            }
            p
        })
        .collect()
}

/// Minimum Borda sum over balanced assignments to some `k`-subset, by
/// trying every voter-to-winner map. Returns the value and all optimal
/// committees.
fn monroe_sum_brute(pos: &[Vec<u64>], m: usize, k: usize) -> (u64, Vec<Vec<usize>>) {
    let n = pos.len();
    let (lo, hi) = (n / k, n.div_ceil(k));
    let mut best = (u64::MAX, Vec::new());
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize != k {
            continue;
        }
        let w: Vec<usize> = (0..m).filter(|&c| mask >> c & 1 == 1).collect();
        let mut map = vec![0usize; n];
        let mut value = u64::MAX;
        loop {
            let mut loads = vec![0; k];
            for &i in &map {
                loads[i] += 1;
            }
            if loads.iter().all(|&l| lo <= l && l <= hi) {
                value = value.min((0..n).map(|v| pos[v][w[map[v]]]).sum());
            }
            // next map in mixed radix k
            let mut i = 0;
            while i < n && map[i] == k - 1 {
                map[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            map[i] += 1;
        }
        if value < best.0 {
            best = (value, vec![w]);
        } else if value == best.0 {
            best.1.push(w);
        }
    }
    best
}

/// Every permutation of `0..m` that makes each vote single-peaked, where a
/// vote is single-peaked on an order when each of its prefixes is a
/// contiguous stretch of that order.
fn all_axes(votes: &[Vec<usize>], m: usize) -> Vec<Vec<usize>> {
    fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
        }
        for i in 0..rest.len() {
            let c = rest.remove(i);
            cur.push(c);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(i, c);
        }
    }
    let mut all = Vec::new();
    perms(&mut (0..m).collect(), &mut Vec::new(), &mut all);
    all.retain(|order| {
        votes.iter().all(|v| {
            (1..=m).all(|len| {
                let mut at: Vec<usize> = v[..len].iter().map(|&c| order.iter().position(|&x| x == c).unwrap()).collect();
                at.sort_unstable();
                at[len - 1] - at[0] == len - 1
            })
        })
    });
    all
}

#[test]
fn fig_profile_cc_sum_auto() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fig.txt", FIG);
    let r = proprep(&["solve", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rec = ResultRecord::from_toml(&r.stdout).unwrap();

    let votes = vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0], vec![2, 1, 0, 3]];
    let pos = positions(&votes, 4);
    let (c, v) = (0..4)
        .map(|c| (c, pos.iter().map(|p| p[c]).sum::<u64>()))
        .min_by_key(|&(c, v)| (v, c))
        .unwrap();
    assert_eq!(rec.solver, "sp-dp");
    assert_eq!(rec.winners, vec![format!("c{}", c + 1)]);
    assert_eq!(rec.value, Some(v));
    assert_eq!(rec.winners, vec!["c2"]);
    assert_eq!(rec.value, Some(2));
}

#[test]
fn six_voter_monroe_sum() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "six.txt", SIX);
    let r = proprep(&["solve", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rec = ResultRecord::from_toml(&r.stdout).unwrap();

    let mut votes = vec![vec![0, 1, 2, 3]; 4];
    votes.extend(vec![vec![2, 1, 0, 3]; 2]);
    let (value, committees) = monroe_sum_brute(&positions(&votes, 4), 4, 3);
    assert_eq!(committees, vec![vec![0, 1, 2]]);
    assert_eq!(rec.value, Some(value));
    assert_eq!(rec.winners, vec!["a", "b", "c"]);
    assert_eq!(rec.loads, vec![2, 2, 2]);
    assert!(rec.m_criterion);
}

#[test]
fn malformed_vote_names_its_line() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.txt", &FIG.replace("c2 c3 c4 c1", "c2 c3 c4 c7"));
    for cmd in ["solve", "detect-axis"] {
        let r = proprep(&[cmd, s(&f)]);
        assert_eq!(r.code, 2);
        assert!(r.stderr.contains("line 8"), "{}", r.stderr);
        assert!(r.stderr.contains("c7"), "{}", r.stderr);
    }
}

#[test]
fn detect_axis_outputs() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "fig.txt", FIG);
    assert_eq!(proprep(&["detect-axis", s(&f)]).stdout, "c1 c2 c3 c4\n");

    let cyclic = "proprep v1\n3 3 1 0 cc sum borda\nx\ny\nz\nx y z\ny z x\nz x y\n";
    assert!(all_axes(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], 3).is_empty());
    let f = write(&dir, "cyc.txt", cyclic);
    let r = proprep(&["detect-axis", s(&f)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "not single-peaked\n"));

    let f = write(&dir, "one.txt", "proprep v1\n1 2 1 0 cc sum borda\nsolo\nsolo\nsolo\n");
    assert_eq!(proprep(&["detect-axis", s(&f)]).stdout, "solo\n");
}

#[test]
fn detected_axes_are_real_axes() {
    let dir = TempDir::new().unwrap();
    for i in 0..20u64 {
        let seed = i.to_string();
        let family = if i % 2 == 0 { "random" } else { "single-peaked" };
        let text = proprep(&["gen", family, "--n", "3", "--m", "4", "--seed", &seed]).stdout;
        let inst = parse_instance(&text).unwrap();
        let axes = all_axes(inst.election.votes(), 4);
        let f = write(&dir, "g.txt", &text);
        let out = proprep(&["detect-axis", s(&f)]).stdout;
        if axes.is_empty() {
            assert_eq!(out, "not single-peaked\n");
        } else {
            let got: Vec<usize> = out
                .split_whitespace()
                .map(|n| inst.election.candidate_index(n).unwrap())
                .collect();
            assert!(axes.contains(&got), "seed {seed}: {out}");
        }
    }
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "single-peaked", "--n", "6", "--m", "5", "--seed", "7"];
    let a = proprep(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, proprep(&args).stdout);
    assert_ne!(a.stdout, proprep(&["gen", "single-peaked", "--n", "6", "--m", "5", "--seed", "8"]).stdout);

    let dir = TempDir::new().unwrap();
    let f = dir.path().join("sp.txt");
    assert_eq!(proprep(&["gen", "single-peaked", "--n", "6", "--m", "5", "--seed", "7", "-o", s(&f)]).code, 0);
    assert_eq!(fs::read_to_string(&f).unwrap(), a.stdout);
}

#[test]
fn gen_hardness_shapes() {
    let x = parse_instance(&proprep(&["gen", "rx3c-monroe", "--n", "3"]).stdout).unwrap();
    // 2n candidates, 4n voters, k = n/3 + n, R = 2n^2
    assert_eq!((x.m(), x.n(), x.k, x.bound), (6, 12, 4, 18));

    let h = parse_instance(&proprep(&["gen", "hs-approval", "--sets", "1,2;2,3", "--k", "1"]).stdout).unwrap();
    // one candidate per element, one voter per set, no dummies at k = 1
    assert_eq!((h.m(), h.n(), h.k), (3, 2, 1));

    let v = parse_instance(&proprep(&["gen", "vc-minimax", "--sets", "1,2;2,3;1,3", "--k", "2", "--R", "2"]).stdout)
        .unwrap();
    // three vertices plus one padding candidate per edge
    assert_eq!((v.m(), v.n(), v.bound), (6, 3, 2));

    let r = proprep(&["gen", "hs-borda", "--m", "5", "--n", "2"]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    let r = proprep(&["gen", "rx3c-monroe", "--n", "4"]);
    assert_eq!(r.code, 2);
}

#[test]
fn verify_reports() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "six.txt", SIX);
    let good = proprep(&["solve", s(&f)]).stdout;
    let sol = write(&dir, "good.toml", &good);
    let r = proprep(&["verify", s(&f), s(&sol)]);
    assert_eq!(r.code, 0, "{}", r.stdout);

    let sol = write(&dir, "value.toml", &good.replace("value = 2", "value = 1"));
    let r = proprep(&["verify", s(&f), s(&sol)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("value check failed"), "{}", r.stdout);

    // a takes all four a-voters, so the loads are 4, 1, 1
    let mut rec = ResultRecord::from_toml(&good).unwrap();
    rec.assignment = ["a", "a", "a", "a", "b", "c"].map(String::from).to_vec();
    rec.loads = vec![4, 1, 1];
    rec.value = Some(1);
    rec.m_criterion = false;
    let sol = write(&dir, "unbalanced.toml", &rec.to_toml());
    let r = proprep(&["verify", s(&f), s(&sol)]);
    assert_eq!(r.code, 1, "{}", r.stdout);
    assert!(r.stdout.contains("winner a has load 4"), "{}", r.stdout);
    assert!(r.stdout.contains("value check passed"), "{}", r.stdout);

    let sol = write(&dir, "garbage.toml", "solver = \n");
    assert_eq!(proprep(&["verify", s(&f), s(&sol)]).code, 2);
}

#[test]
fn decision_and_budget_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "six.txt", SIX);
    let r = proprep(&["solve", s(&f), "--mode", "decide", "--R", "1"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("status = \"infeasible\""));
    let r = proprep(&["solve", s(&f), "--mode", "decide", "--R", "2"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("status = \"feasible\""));

    let r = proprep(&["solve", s(&f), "--solver", "subset-enum", "--budget-subsets", "2"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("--budget-subsets"));
    let r = proprep(&["solve", s(&f), "--solver", "sp-greedy"]);
    assert_eq!(r.code, 2);
    let r = proprep(&["solve", s(&f), "--k", "9"]);
    assert_eq!(r.code, 2);
}

#[test]
fn records_are_byte_stable() {
    let dir = TempDir::new().unwrap();
    let text = proprep(&["gen", "random", "--n", "7", "--m", "6", "--k", "3", "--rule", "monroe", "--seed", "3"]).stdout;
    let f = write(&dir, "r.txt", &text);
    let a = proprep(&["solve", s(&f)]);
    assert_eq!(a.stdout, proprep(&["solve", s(&f)]).stdout);
    assert!(!a.stdout.contains("wall_ms"));
    assert!(proprep(&["solve", s(&f), "--timing"]).stdout.contains("wall_ms"));
}

#[test]
fn auto_matches_subset_enumeration() {
    let dir = TempDir::new().unwrap();
    let mut n = 0;
    for seed in 0..24u64 {
        let rule = ["cc", "monroe"][seed as usize % 2];
        let obj = ["sum", "minimax"][seed as usize / 2 % 2];
        let family = ["random", "single-peaked"][seed as usize / 4 % 2];
        let mut args = vec!["gen", family, "--n", "7", "--m", "6", "--k", "3", "--rule", rule, "--objective", obj];
        let seed_s = seed.to_string();
        args.extend(["--seed", &seed_s]);
        if seed % 3 == 0 {
            args.push("--approval");
        }
        let f = write(&dir, "g.txt", &proprep(&args).stdout);
        let auto = ResultRecord::from_toml(&proprep(&["solve", s(&f)]).stdout).unwrap();
        let brute = ResultRecord::from_toml(&proprep(&["solve", s(&f), "--solver", "subset-enum"]).stdout).unwrap();
        assert_eq!(auto.value, brute.value, "seed {seed} ({})", auto.solver);
        n += 1;
    }
    assert_eq!(n, 24);
}

#[test]
fn bench_corpus() {
    let dir = TempDir::new().unwrap();
    let r = proprep(&["bench", s(dir.path())]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().count(), 1);

    for (name, seed) in [("b.txt", "2"), ("a.txt", "1")] {
        let text = proprep(&["gen", "single-peaked", "--n", "6", "--m", "5", "--seed", seed]).stdout;
        write(&dir, name, &text);
    }
    let r = proprep(&["bench", s(dir.path())]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let files: Vec<&str> = r.stdout.lines().skip(1).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert!(files.windows(2).all(|w| w[0] <= w[1]));
    assert!(files.contains(&"a.txt") && files.contains(&"b.txt"));
    assert!(r.stdout.contains("sp-dp"));
    assert!(r.stdout.contains("subset-enum"));

    // a single-peaked instance far beyond subset enumeration
    let big = proprep(&["gen", "single-peaked", "--n", "30", "--m", "200", "--k", "10", "--seed", "5"]).stdout;
    let big_dir = TempDir::new().unwrap();
    write(&big_dir, "big.txt", &big);
    let r = proprep(&["bench", s(big_dir.path()), "--budget-seconds", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let row = |solver: &str| {
        r.stdout
            .lines()
            .find(|l| l.split_whitespace().nth(1) == Some(solver))
            .map(|l| l.split_whitespace().nth(2).unwrap().to_string())
    };
    assert!(row("sp-dp").unwrap().parse::<u64>().is_ok());
    assert_eq!(row("subset-enum").as_deref(), Some("skipped"));
}
