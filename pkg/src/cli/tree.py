"""`tree` 하위 명령: induce, iso, embed, enumerate, canon."""

from __future__ import annotations

import argparse
import random

from src.config import get_settings
from src.trees import (
    brute_force_embeddings,
    canonical_form,
    count_labeled,
    enumerate_embeddings,
    enumerate_labeled,
    find_isomorphism,
    format_newick,
    induced,
    is_isomorphic,
    label_key,
)
from src.utils.exceptions import OracleDisagreement

from .inputs import parse_labels, read_tree
from .report import ExitCode, Report


def _embedding_key(embedding: dict) -> tuple:
    return tuple(sorted((label_key(leaf), label_key(image)) for leaf, image in embedding.items()))


def _format_embedding(embedding: dict) -> str:
    return " ".join(f"{leaf}->{embedding[leaf]}" for leaf in sorted(embedding, key=label_key))


def cmd_induce(args: argparse.Namespace) -> Report:
    tree = read_tree(args.tree)
    result = induced(tree, parse_labels(args.leaves))
    text = format_newick(result)
    return Report("tree induce", f"{args.tree} {args.leaves}", text, data={"tree": text})


def cmd_iso(args: argparse.Namespace) -> Report:
    first, second = read_tree(args.first), read_tree(args.second)
    verdict = is_isomorphic(first, second)
    witness = find_isomorphism(first, second) if verdict or args.oracle else None
    if args.oracle and (witness is not None) != verdict:
        raise OracleDisagreement("정준형 비교와 동형 사상 탐색 결과가 다릅니다.")
    lines = [f"bijection: {_format_embedding(witness)}"] if witness else []
    return Report(
        "tree iso",
        f"{args.first} {args.second}",
        "isomorphic" if verdict else "not isomorphic",
        ExitCode.TRUE if verdict else ExitCode.FALSE,
        lines,
        {"isomorphic": verdict, "bijection": {str(k): v for k, v in (witness or {}).items()}},
    )


def cmd_embed(args: argparse.Namespace) -> Report:
    source, target = read_tree(args.source), read_tree(args.target)
    embeddings = enumerate_embeddings(source, target)
    if args.oracle:
        reference = brute_force_embeddings(source, target)
        if sorted(map(_embedding_key, embeddings)) != sorted(map(_embedding_key, reference)):
            raise OracleDisagreement(f"매장 수 불일치: 탐색 {len(embeddings)}, 전수 {len(reference)}")
    exit_code = ExitCode.TRUE if embeddings else ExitCode.FALSE
    subject = f"{args.source} {args.target}"
    if args.count:
        return Report("tree embed", subject, str(len(embeddings)), exit_code, data={"count": len(embeddings)})
    lines = [_format_embedding(embedding) for embedding in embeddings]
    return Report("tree embed", subject, f"{len(embeddings)} embeddings", exit_code, lines, {"count": len(embeddings), "embeddings": lines})


def cmd_enumerate(args: argparse.Namespace) -> Report:
    subject = str(args.n)
    if args.count and not args.oracle:
        total = count_labeled(args.n)
        return Report("tree enumerate", subject, str(total), data={"count": total})
    trees = enumerate_labeled(args.n)
    if args.oracle and len(trees) != count_labeled(args.n):
        raise OracleDisagreement(f"열거 {len(trees)} 개, 공식 {count_labeled(args.n)} 개")
    if args.classes:
        classes = len({canonical_form(tree) for tree in trees})
        return Report("tree enumerate", subject, f"{classes} classes", data={"count": len(trees), "classes": classes})
    if args.count:
        return Report("tree enumerate", subject, str(len(trees)), data={"count": len(trees)})
    if args.sample is not None:
        seed = get_settings().compute.seed if args.seed is None else args.seed
        trees = random.Random(seed).sample(trees, min(args.sample, len(trees)))
    lines = [format_newick(tree) for tree in trees]
    return Report("tree enumerate", subject, "", lines=lines, data={"trees": lines})


def cmd_canon(args: argparse.Namespace) -> Report:
    form = canonical_form(read_tree(args.tree))
    return Report("tree canon", args.tree, form, data={"canonical": form})


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("tree", help="보론 트리 계산")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    induce = commands.add_parser("induce", parents=[common], help="잎 부분집합이 유도하는 트리")
    induce.add_argument("tree")
    induce.add_argument("leaves", help="쉼표로 구분한 잎 목록")
    induce.set_defaults(handler=cmd_induce)

    iso = commands.add_parser("iso", parents=[common], help="동형 판정")
    iso.add_argument("first")
    iso.add_argument("second")
    iso.set_defaults(handler=cmd_iso)

    embed = commands.add_parser("embed", parents=[common], help="매장 열거")
    embed.add_argument("source")
    embed.add_argument("target")
    embed.add_argument("--count", action="store_true", help="개수만 출력")
    embed.set_defaults(handler=cmd_embed)

    enumerate_parser = commands.add_parser("enumerate", parents=[common], help="잎 1..N 의 라벨 트리")
    enumerate_parser.add_argument("n", type=int)
    enumerate_parser.add_argument("--count", action="store_true", help="개수만 출력")
    enumerate_parser.add_argument("--classes", action="store_true", help="동형류 개수")
    enumerate_parser.add_argument("--sample", type=int, default=None, help="무작위 K 개만 출력")
    enumerate_parser.set_defaults(handler=cmd_enumerate)

    canon = commands.add_parser("canon", parents=[common], help="정준형")
    canon.add_argument("tree")
    canon.set_defaults(handler=cmd_canon)


__all__ = ["register"]
