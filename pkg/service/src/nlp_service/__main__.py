"""Run the service: python -m nlp_service [--port N] [--generation bundled-scripted]"""

import argparse
import logging

import uvicorn

from .app import create_app
from .config import ServiceConfig


def main(argv=None):
    parser = argparse.ArgumentParser(prog="nlp-service", description=__doc__)
    parser.add_argument("--host", default=None)
    parser.add_argument("--port", type=int, default=None)
    parser.add_argument("--embedding", default=None, help="bundled-lexical or hf:<model-id>")
    parser.add_argument("--sentiment", default=None, help="bundled-lexicon or hf:<model-id>")
    parser.add_argument("--generation", default=None, help="bundled-scripted or hf:<model-id>")
    parser.add_argument("--max-input", type=int, default=None)
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.INFO)
    config = ServiceConfig.from_env(
        host=args.host,
        port=args.port,
        embedding_model=args.embedding,
        sentiment_model=args.sentiment,
        generation_model=args.generation,
        max_input_chars=args.max_input,
    )
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port)


if __name__ == "__main__":
    main()
