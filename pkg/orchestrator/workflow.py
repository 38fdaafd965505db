"""
Управление рабочими процессами командной строки: verify, homology, export, explore24
"""

import sys
import logging

from chain_complex import build_f_complex, build_g_complex, homology_report, simplicial_homology_dims
from checks import CHECKS
from field import Field
from storage import JsonStorage, dumps
from triangulation import build_lattice, random_coordinates
from utils.errors import InputError
from weights import deformed_weight, weight

logger = logging.getLogger("pachner_grassmann")

VERIFY_TARGETS = ("f-complex", "g-complex", "pachner33", "theorem-d1", "theorem-b")

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2


class WorkflowManager:
    """
    Класс для управления рабочими процессами командной строки

    Каждый процесс принимает RunConfig, печатает JSON-строки в поток
    отчетов и возвращает код завершения.
    """
    def __init__(self, orchestrator, stream=None):
        """
        Инициализация менеджера рабочих процессов

        Args:
            orchestrator: Экземпляр оркестратора
            stream: Поток для строк отчета (по умолчанию stdout)
        """
        self.orchestrator = orchestrator
        self.stream = stream or sys.stdout
        self.available_workflows = {
            "verify": self.verify_workflow,
            "homology": self.homology_workflow,
            "export": self.export_workflow,
            "explore24": self.explore24_workflow,
        }

    def execute_workflow(self, workflow_name, config):
        """
        Выполнение рабочего процесса по имени

        Args:
            workflow_name: Название рабочего процесса
            config: RunConfig

        Returns:
            int: Код завершения
        """
        if workflow_name not in self.available_workflows:
            logger.error(f"Неизвестный рабочий процесс: {workflow_name}")
            return EXIT_INPUT
        logger.info(f"Запуск рабочего процесса: {workflow_name}")
        try:
            config.validate()
            return self.available_workflows[workflow_name](config)
        except InputError as e:
            logger.error(f"Ошибка входных данных: {e}")
            return EXIT_INPUT

    def emit(self, data):
        """
        Печать одной строки отчета
        """
        self.stream.write(dumps(data) + "\n")
        self.stream.flush()

    def _run_check(self, check_name, config):
        options = {"field": config.field, "tri": config.tri, "deform": config.deform}
        check = CHECKS[check_name](**options)
        if check.tri:
            # Ошибки файла триангуляции должны проявиться до запуска испытаний
            check.load()
        reports = self.orchestrator.run_trials(
            check_name, check.options(), config.seed, config.trials, config.timing
        )
        for report in reports:
            self.emit(report)
        passed = sum(1 for r in reports if r["passed"])
        self.emit({
            "summary": check_name,
            "trials": len(reports),
            "passed": passed,
            "failed": len(reports) - passed,
        })
        return EXIT_OK if passed == len(reports) else EXIT_VIOLATED

    def verify_workflow(self, config):
        """
        Проверка тождеств: серия испытаний со своим зерном каждое

        Returns:
            int: 0 если все испытания пройдены, иначе 1
        """
        if config.target not in VERIFY_TARGETS:
            raise InputError(f"Неизвестная цель verify: {config.target}")
        return self._run_check(config.target, config)

    def explore24_workflow(self, config):
        """
        Исследование хода 2→4; код 0 при любой невязке
        """
        self._run_check("explore24", config)
        return EXIT_OK

    def _load_with_zeta(self, config):
        spec = config.tri
        if not spec:
            raise InputError("Требуется триангуляция (--tri)")
        storage = JsonStorage()
        loaded = storage.load_triangulation(spec, config.field)
        field = Field.from_tag(config.field)
        zeta = loaded.zeta
        if zeta is None or zeta.field != field:
            zeta = random_coordinates(loaded.triangulation, field, config.seed)
        return loaded.triangulation, build_lattice(loaded.triangulation), zeta

    def homology_workflow(self, config):
        """
        Размерности, ранги и гомологии комплекса f или g

        Returns:
            int: Код завершения
        """
        if config.target not in ("f", "g"):
            raise InputError(f"Комплекс должен быть f или g, получено {config.target}")
        triangulation, lattice, zeta = self._load_with_zeta(config)
        if config.target == "f":
            named_maps = build_f_complex(triangulation, lattice, zeta).maps()
        else:
            named_maps = build_g_complex(triangulation, lattice, zeta).maps()

        report = {"complex": config.target, "field": zeta.field.tag, "seed": config.seed}
        report.update(homology_report(named_maps))
        if config.compare:
            report["simplicial"] = simplicial_homology_dims(triangulation, lattice, zeta.field)
            if lattice.boundary_tetrahedra:
                report["simplicial_relative"] = simplicial_homology_dims(
                    triangulation, lattice, zeta.field, relative=True
                )
        self.emit(report)
        return EXIT_OK

    def export_workflow(self, config):
        """
        Экспорт матриц обоих комплексов и весов в директорию --out

        Returns:
            int: Код завершения
        """
        triangulation, lattice, zeta = self._load_with_zeta(config)
        storage = JsonStorage(config.out)
        fc = build_f_complex(triangulation, lattice, zeta)
        gc = build_g_complex(triangulation, lattice, zeta)

        matrices = {
            "f3": fc.f3, "f4": fc.f4, "f3_tilde": fc.f3_tilde, "f4_tilde": fc.f4_tilde,
            "g2": gc.g2, "g3": gc.g3, "g4": gc.g4, "g5": gc.g5,
        }
        written = [storage.save(f"{name}.json", matrix.to_json()) for name, matrix in matrices.items()]

        chain = storage.load_xchain(config.input, zeta.field) if config.input else None
        weights = []
        for u in triangulation.simplices4:
            entry = {"simplex": list(u), "eps": triangulation.eps(u), "weight": weight(u, zeta).to_json()}
            if chain is not None:
                entry["deformed"] = deformed_weight(u, zeta, chain, triangulation.eps(u)).to_json()
            weights.append(entry)
        written.append(storage.save("weights.json", {
            "field": zeta.field.tag,
            "zeta": zeta.to_json(),
            "weights": weights,
        }))
        self.emit({"export": config.tri, "field": zeta.field.tag, "seed": config.seed, "files": written})
        return EXIT_OK
