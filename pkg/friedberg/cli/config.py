"""
--- Friedberg ---
Run configuration: packaged YAML defaults, config files and command-line overrides.
"""
import os
import yaml
from friedberg.exceptions import BadParameters
from friedberg.protocol.read import parse_kind
from friedberg.adversaries.read import make_adversary
from friedberg.referee.hypotheses import check_extension_hypothesis, class_a_members


DEFAULT_CONFIG = os.path.join(os.path.abspath(os.path.dirname(__file__)), 'run_config.yaml')

MODES = ('incremental', 'both')


def parse_window(text):
    """
    Parse a 'ROWSxCOLS' window.

    Returns
    -------
    tuple
        (rows, cols).

    """
    try:
        rows, cols = [int(i) for i in str(text).lower().split('x')]
    except ValueError:
        raise BadParameters('Bad window %r, expected ROWSxCOLS' % text)
    if rows < 1 or cols < 1:
        raise BadParameters('Window must be at least 1x1, got %r' % text)
    return rows, cols


class RunConfig:
    """
    Configuration of one game run.

    """
    def __init__(self, read=None, **options):
        """
        Create a run configuration from the packaged defaults.

        Parameters
        ----------
        read : str or None
            Yaml config file read over the defaults.
        options : dict
            Overrides applied last (None values are ignored).

        """
        self.read_config(DEFAULT_CONFIG)
        if read is not None:
            self.read_config(read)
        self.update(**options)

    def __repr__(self):
        return "<RunConfig %s | adversary: %s | stages: %i | seed: %i>" % (self.config['game'],
                                                                           self.config['adversary'],
                                                                           self.config['stages'], self.config['seed'])

    def __getitem__(self, key):
        return self.config[key]

    def read_config(self, config_file):
        """
        Read config yaml file over the current configuration.

        Parameters
        ----------
        config_file : str
            Yaml file name.

        Returns
        -------
        None
            Updates the configuration; unknown keys raise BadParameters.

        Notes
        -----
        Relative adversary paths ('scripted:dup.adv') are resolved against the
        directory of the config file that names them.

        """
        with open(config_file, 'r') as f:
            config = yaml.safe_load(f) or {}
        if not isinstance(config, dict):
            raise BadParameters('Config file %s is not a mapping' % config_file)
        if not hasattr(self, 'config'):
            self.config = config
            return
        if config.get('adversary'):
            config['adversary'] = resolve_paths(config['adversary'], os.path.dirname(os.path.abspath(config_file)))
        self.update(**config)

    def update(self, **options):
        for key, value in options.items():
            if value is None:
                continue
            if key not in self.config:
                raise BadParameters('Unknown config key: %s' % key)
            if key == 'params':
                params = dict(self.config.get('params') or {})
                params.update({k: v for k, v in (value or {}).items() if v is not None})
                value = params
            self.config[key] = value

    @property
    def window(self):
        return parse_window(self.config['window'])

    @property
    def hypothesis(self):
        n, m = self.config['hypothesis']
        return int(n), int(m)

    def validate(self):
        """
        Build and check the run's game kind and adversary before the run.

        Returns
        -------
        tuple
            (GameKind, Adversary).

        Raises
        ------
        BadParameters
            For missing or superfluous game parameters, a bad window or stage bound,
            an unknown referee mode, or an ext class A failing the extension hypothesis proxy.

        """
        if int(self.config['stages']) < 1:
            raise BadParameters('stages must be at least 1')
        if self.config['mode'] not in MODES:
            raise BadParameters('Unknown referee mode: %s' % self.config['mode'])
        parse_window(self.config['window'])
        kind = parse_kind(self.config['game'], self.config['params'])
        adversary = make_adversary(self.config['adversary'], int(self.config['step_scale']))
        if kind.name == 'ext':
            limits = adversary.declared_limits('A')
            declared = {row: decl.limit for row, decl in limits.items()}
            n, m = self.hypothesis
            verdict = check_extension_hypothesis(class_a_members(declared), kind.beta, n, m)
            if verdict.status == 'violated':
                raise BadParameters('Class A fails the extension hypothesis: %s' % verdict.detail)
        return kind, adversary


def resolve_paths(spec, directory):
    """Make the file part of an adversary spec relative to a directory."""
    kind, _, rest = spec.partition(':')
    if kind in ('scripted', 'enumeration') and rest and not os.path.isabs(rest):
        return '%s:%s' % (kind, os.path.join(directory, rest))
    if kind == 'frozen':
        stage, _, base = rest.partition(':')
        return 'frozen:%s:%s' % (stage, resolve_paths(base, directory))
    return spec
