"""`python -m dpcolor`: the same commands as the `dpcolor` script."""
from dpcolor.cli import app

if __name__ == "__main__":
    app(prog_name="dpcolor")
