"""Operator command line: build indexes, train models, serve, query, evaluate.

Results go to stdout; logs and errors go to stderr. Exit codes: 0 on
success, 1 on usage errors, 2 on data errors (bad files, unknown paths,
inconsistent inputs).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from versus.bow import (
    TrainConfig,
    generate_training_records,
    load_model,
    load_training_file,
    save_model,
    train_bow,
)
from versus.corpus import IngestError, SentenceStore
from versus.index import INDEX_FILENAME, Index
from versus.pipeline import (
    ComparisonEngine,
    ComparisonQuery,
    ConfigurationError,
    QueryError,
    result_to_json,
)
from versus.rank import RankingConfig

log = logging.getLogger("versus")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2); we want 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="versus", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    p_index = sub.add_parser("index", help="ingest a JSONL corpus and build the index")
    p_index.add_argument("corpus", help="line-delimited JSON corpus file")
    p_index.add_argument("out", help="output directory for store + index")
    p_index.add_argument("--k1", type=float, default=1.2, help="BM25 k1 parameter")
    p_index.add_argument("--b", type=float, default=0.75, help="BM25 b parameter")

    p_train = sub.add_parser("train", help="train the bag-of-words model")
    p_train.add_argument("data", help="line-delimited JSON training file")
    p_train.add_argument("out", help="output model file")
    p_train.add_argument("--epochs", type=int, default=500)
    p_train.add_argument("--lr", type=float, default=0.5)
    p_train.add_argument("--l2", type=float, default=1e-3)

    p_gen = sub.add_parser("gen-train", help="write synthetic training data")
    p_gen.add_argument("out", help="output JSONL file")
    p_gen.add_argument("--per-class", type=int, default=50)
    p_gen.add_argument("--seed", type=int, default=0)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("config", nargs="?", default=None, help="JSON config file")

    p_query = sub.add_parser("query", help="run one comparison")
    p_query.add_argument("index", help="index directory (from `versus index`)")
    p_query.add_argument("--a", required=True, dest="object_a", help="first object")
    p_query.add_argument("--b", required=True, dest="object_b", help="second object")
    p_query.add_argument("--aspect", action="append", default=[], metavar="TEXT:WEIGHT",
                         help="weighted aspect, e.g. speed:3 (repeatable)")
    p_query.add_argument("--model", choices=["default", "bow"], default="default")
    p_query.add_argument("--model-path", default=None, help="trained BoW model file")
    p_query.add_argument("--fast", action="store_true", help="cap fall-back retrieval at 500")
    p_query.add_argument("--json", action="store_true", help="emit the full JSON result")
    p_query.add_argument("--gamma", type=float, default=0.8)
    p_query.add_argument("--delta", type=float, default=0.1)
    p_query.add_argument("--top", type=int, default=5, help="evidence lines per side")

    p_eval = sub.add_parser("eval", help="run the topic evaluation harness")
    p_eval.add_argument("index", help="index directory")
    p_eval.add_argument("topics", help="line-delimited JSON topic file")
    p_eval.add_argument("--model", choices=["default", "bow"], default="default")
    p_eval.add_argument("--model-path", default=None)
    p_eval.add_argument("--weight", type=int, default=3,
                        help="weight applied to each topic's aspect")
    return parser


def _parse_aspects(raw: list[str]) -> list[tuple[str, int]]:
    aspects = []
    for item in raw:
        text, sep, weight = item.rpartition(":")
        if not sep or not text:
            raise _UsageError(f"aspect must look like text:weight, got {item!r}")
        try:
            aspects.append((text, int(weight)))
        except ValueError:
            raise _UsageError(f"aspect weight must be an integer, got {item!r}")
    return aspects


def _load_engine(index_dir: str, model: str, model_path: str | None,
                 ranking: RankingConfig | None = None) -> ComparisonEngine:
    directory = Path(index_dir)
    if not directory.is_dir():
        raise FileNotFoundError(f"index directory not found: {directory}")
    store = SentenceStore.load(directory)
    index = Index.load(directory / INDEX_FILENAME, store)
    bow_model = None
    if model == "bow":
        if model_path is None:
            raise ConfigurationError("--model bow requires --model-path")
        bow_model = load_model(model_path)
    return ComparisonEngine(index, bow_model=bow_model, ranking=ranking)


def _cmd_index(args) -> int:
    store = SentenceStore()
    with open(args.corpus, encoding="utf-8") as handle:
        report = store.ingest(handle)
    out = Path(args.out)
    store.save(out)
    index = Index.build(store, k1=args.k1, b=args.b)
    index.save(out / INDEX_FILENAME)
    stats = report.stats
    print(f"indexed {stats.document_count} documents, {stats.sentence_count} sentences, "
          f"{stats.token_count} tokens ({report.skipped} records skipped) -> {out}")
    return EXIT_OK


def _cmd_train(args) -> int:
    examples = load_training_file(args.data)
    config = TrainConfig(max_epochs=args.epochs, learning_rate=args.lr, l2=args.l2)
    model = train_bow(examples, config)
    save_model(model, args.out)
    print(f"trained on {len(examples)} examples, vocabulary {len(model.vocabulary)}, "
          f"{model.epochs_run} epochs -> {args.out}")
    return EXIT_OK


def _cmd_gen_train(args) -> int:
    records = generate_training_records(per_class=args.per_class, seed=args.seed)
    with open(args.out, "w", encoding="utf-8") as out:
        for record in records:
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
    print(f"wrote {len(records)} records -> {args.out}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    from versus.service import load_service_config, run

    config = load_service_config(args.config)
    run(config)
    return EXIT_OK


def _cmd_query(args) -> int:
    engine = _load_engine(args.index, args.model, args.model_path,
                          RankingConfig(gamma=args.gamma, delta=args.delta))
    query = ComparisonQuery(
        object_a=args.object_a,
        object_b=args.object_b,
        aspects=tuple(_parse_aspects(args.aspect)),
        model=args.model.upper(),
        fast_mode=args.fast,
    )
    result = engine.compare(query)
    if args.json:
        print(result_to_json(result))
        return EXIT_OK

    totals = result.totals
    denominator = totals.total_a + totals.total_b
    share = totals.total_a / denominator if denominator else 0.5
    names = {"OBJECT_A": args.object_a, "OBJECT_B": args.object_b, "TIE": "tie"}
    print(f"winner: {names[result.winner]}")
    print(f"totals: {args.object_a} {totals.total_a:.3f} ({share:.1%}) | "
          f"{args.object_b} {totals.total_b:.3f} ({1 - share:.1%})")
    for text, _weight in result.query.aspects:
        sub_a, sub_b = totals.per_aspect.get(text, (0.0, 0.0))
        print(f"aspect {text!r}: {sub_a:.3f} | {sub_b:.3f}")
    for side, items in ((args.object_a, result.pro_a), (args.object_b, result.pro_b)):
        print(f"pro {side}:")
        for sc in items[:args.top]:
            print(f"  [s={sc.s:.3f} {sc.classification.label.value}"
                  f"{' neg' if sc.classification.negation_applied else ''}] "
                  f"{sc.sentence.text}")
    if result.generated_aspects:
        chips = ", ".join(f"{a.phrase} ({names[a.assigned]})"
                          for a in result.generated_aspects)
        print(f"generated aspects: {chips}")
    return EXIT_OK


def _cmd_eval(args) -> int:
    engine = _load_engine(args.index, args.model, args.model_path)
    topics = []
    with open(args.topics, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                topic = json.loads(line)
                gold = topic["gold"]
                if gold not in ("BETTER", "WORSE", "EQUAL"):
                    raise ValueError(f"gold must be BETTER/WORSE/EQUAL, got {gold!r}")
                topics.append((topic["object_a"], topic["object_b"], topic["aspect"], gold))
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise ValueError(f"{args.topics}:{lineno}: {exc}") from exc
    if not topics:
        raise ValueError(f"{args.topics}: no topics found")

    direction = {"OBJECT_A": "BETTER", "OBJECT_B": "WORSE", "TIE": "EQUAL"}
    correct = 0
    for object_a, object_b, aspect, gold in topics:
        query = ComparisonQuery(object_a=object_a, object_b=object_b,
                                aspects=((aspect, args.weight),),
                                model=args.model.upper())
        predicted = direction[engine.compare(query).winner]
        hit = predicted == gold
        correct += hit
        print(f"{object_a} vs {object_b} [{aspect}]: predicted {predicted}, "
              f"gold {gold} {'OK' if hit else 'MISS'}")
    accuracy = correct / len(topics)
    print(f"accuracy: {accuracy:.3f} ({correct}/{len(topics)})")
    return EXIT_OK


_COMMANDS = {
    "index": _cmd_index,
    "train": _cmd_train,
    "gen-train": _cmd_gen_train,
    "serve": _cmd_serve,
    "query": _cmd_query,
    "eval": _cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QueryError as exc:
        print(f"error: invalid query: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, IngestError, ConfigurationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
