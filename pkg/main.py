"""
Hirzebruch Gluing - Main Entry Point
====================================
Batch front end for glued stability computations on Hirzebruch surfaces.

    python main.py charge    --config params.json --object O_x
    python main.py wall      --config params.json [--sweep zeta_prime.0.re=-1:3:4]
    python main.py classify  --config params.json
    python main.py plot      --config params.json --out figure.svg
    python main.py selfcheck [--seed N]
"""
import sys

from dotenv import load_dotenv

# Load environment variables FIRST so HIRZEBRUCH_* settings apply
load_dotenv(override=True)

from hirzebruch_gluing.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
