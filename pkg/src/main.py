from loguru import logger

from src.drivers.cli.main import app


def run() -> None:
    logger.debug("Starting scene-change CLI")
    app()


if __name__ == "__main__":
    run()
