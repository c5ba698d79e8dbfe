"""``universal build|embed|verify``: host state lives in a JSON file."""
import argparse
import json

from minorhost.core.config import RunConfig
from minorhost.core.exceptions import PreconditionError
from minorhost.schemas.schemas import EmbeddingCertificateDocument
from minorhost.universal.embedding import EmbeddingCertificate, embed
from minorhost.universal.host import Backend, build_host, host_to_document, load_host, materialize, save_host
from minorhost.universal.verify import verify_host

from minorhost.cli.common import add_graph_input, emit, read_graph, read_text, write_document


def _state(args: argparse.Namespace, config: RunConfig) -> str:
    path = args.state or config.state
    if not path:
        raise PreconditionError("no host state file given", {"flag": "--state"})
    return path


def cmd_build(args: argparse.Namespace, config: RunConfig) -> int:
    host = build_host(args.forbid, args.backend)
    save_host(host, _state(args, config))
    emit(host_to_document(host))
    return 0


def cmd_embed(args: argparse.Namespace, config: RunConfig) -> int:
    path = _state(args, config)
    host = load_host(path)
    cert = embed(read_graph(args), host, config.embedding_budget)
    save_host(host, path)
    if args.cert:
        write_document(cert.to_document(), args.cert)
    emit(cert.to_document())
    return 0


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    """Verify the host, and replay ``--cert`` against its own truncation and the current host."""
    path = _state(args, config)
    host = load_host(path)
    report = verify_host(host, args.pad, config.search_budget)
    result = report.model_dump()
    ok = report.free
    if args.cert:
        doc = EmbeddingCertificateDocument.model_validate(json.loads(read_text(args.cert)))
        cert = EmbeddingCertificate.from_document(doc)
        replay = {"recorded": cert.verify(), "current": cert.verify(materialize(host))}
        result["certificate"] = replay
        ok = ok and all(replay.values())
    emit(result)
    return 0 if ok else 1


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("universal", help="build, grow and verify universal hosts")
    commands = parser.add_subparsers(dest="universal_command", required=True)

    build = commands.add_parser("build", help="create an empty host for C<n>, C<n>,<m> or W<k>")
    build.add_argument("--forbid", required=True)
    build.add_argument("--backend", choices=[b.value for b in Backend], default=Backend.ADAPTIVE.value)
    build.add_argument("--state", default=None)
    build.set_defaults(func=cmd_build)

    embed_cmd = commands.add_parser("embed", help="embed the input graph into the host")
    embed_cmd.add_argument("--state", default=None)
    embed_cmd.add_argument("--cert", default=None, help="also write the certificate here")
    add_graph_input(embed_cmd)
    embed_cmd.set_defaults(func=cmd_embed)

    verify = commands.add_parser("verify", help="check host invariants, optionally replay a certificate")
    verify.add_argument("--state", default=None)
    verify.add_argument("--pad", type=int, default=None, help="pad the truncation to this many vertices")
    verify.add_argument("--cert", default=None)
    verify.set_defaults(func=cmd_verify)
