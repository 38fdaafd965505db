# Файл: app.py
# Точка входа командной строки: проверки, гомологии, экспорт и исследование хода 2→4

import sys
import os
import argparse

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from dotenv import load_dotenv

from orchestrator import Orchestrator, WorkflowManager, VERIFY_TARGETS, EXIT_INPUT
from utils.config import DEFORM_MODES, RunConfig, default_field, default_trials, worker_count
from utils.errors import InputError
from utils.logger import Logger


def build_parser():
    """
    Парсер аргументов командной строки

    Returns:
        argparse.ArgumentParser: Парсер с подкомандами
    """
    parser = argparse.ArgumentParser(
        prog="pachner-grassmann",
        description="Точная проверка экзотических комплексов и соотношений Пахнера",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tri", help="Встроенная конфигурация или путь к JSON")
    common.add_argument("--field", default=None, help="q или gf:P")
    common.add_argument("--seed", type=int, default=0, help="Начальное зерно")
    common.add_argument("--trials", type=int, default=None, help="Число испытаний")
    common.add_argument("--deform", choices=DEFORM_MODES, default="none")
    common.add_argument("--out", help="Директория экспорта")
    common.add_argument("--input", help="Файл x-цепи")
    common.add_argument("--timing", action="store_true", help="Записывать elapsed_ms в отчеты")

    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="Проверка тождеств")
    verify.add_argument("target", choices=VERIFY_TARGETS)

    homology = commands.add_parser("homology", parents=[common], help="Гомологии комплекса f или g")
    homology.add_argument("target", choices=("f", "g"))
    homology.add_argument("--compare", action="store_true", help="Добавить симплициальные числа Бетти")

    commands.add_parser("export", parents=[common], help="Экспорт матриц и весов")
    commands.add_parser("explore24", parents=[common], help="Исследование хода 2→4")
    return parser


def config_from_args(args):
    """
    RunConfig из разобранных аргументов и переменных окружения
    """
    return RunConfig(
        command=args.command,
        target=getattr(args, "target", None),
        field=args.field or default_field(),
        seed=args.seed,
        trials=args.trials if args.trials is not None else (1 if args.command in ("homology", "export") else default_trials()),
        tri=args.tri,
        input=args.input,
        out=args.out,
        deform=args.deform,
        timing=args.timing,
        compare=getattr(args, "compare", False),
        threads=worker_count(),
    )


def main(argv=None):
    """
    Запуск команды

    Returns:
        int: Код завершения (0 - все проверки пройдены, 1 - тождество нарушено, 2 - ошибка ввода)
    """
    # Загрузка переменных окружения
    load_dotenv()
    logger = Logger()

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else 0

    try:
        config = config_from_args(args)
    except InputError as e:
        logger.error(f"Ошибка конфигурации: {e}")
        return EXIT_INPUT

    manager = WorkflowManager(Orchestrator(config.threads))
    return manager.execute_workflow(config.command, config)


if __name__ == "__main__":
    sys.exit(main())
