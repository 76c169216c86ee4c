"""Entry point: `python main.py <command>` is the same as the `lrpictures` script"""

from app.cli.main import cli

if __name__ == "__main__":
    cli()
