"""Write the derived transition matrices and the comparison with the printed
ones to reference/."""

from pathlib import Path

from apollonian.matrix_report import dump_matrices, report

OUT = Path(__file__).resolve().parents[1] / "reference"


def main():
    OUT.mkdir(exist_ok=True)
    (OUT / "transition_matrices.txt").write_text(dump_matrices())
    (OUT / "matrix_report.txt").write_text(report())
    print(report())


if __name__ == "__main__":
    main()
