"""Orbit sizes, stabilizer orders and pair-orbit counts for every realized action."""
from qatlas import sp6


def main() -> None:
    print(f"{'action':10s} {'kind':20s} {'orbit':>6s} {'stabilizer':>10s} {'pair orbits':>11s}")
    for label, kind, rep, _ in sp6.realized_actions():
        size, stab = sp6.orbit_and_stabilizer_order(kind, rep)
        print(f"{label:10s} {kind:20s} {size:6d} {stab:10d} {sp6.pair_rank(kind, rep):11d}")


if __name__ == "__main__":
    main()
