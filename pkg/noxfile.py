import nox.sessions

# Nox
nox.options.reuse_existing_virtualenvs = True
nox.options.sessions = [
    'tests',
    'tests_numpy',
    'tests_pydantic',
]

# Versions
PYTHON_VERSIONS = ['3.10', '3.11', '3.12']
NUMPY_VERSIONS = [
    # Selective: the latest 1.x, and 2.x
    '1.26.4',
    '2.0.2', '2.1.3',
]
PYDANTIC_VERSIONS = [
    # Selective
    '2.5.3', '2.7.4', '2.9.2',
]


@nox.session(python=PYTHON_VERSIONS)
def tests(session: nox.sessions.Session, *, overrides: dict[str, str] = {}):
    """ Run all tests """
    # Install from requirements.txt: Poetry within Poetry fails locally
    session.install(*requirements_txt, '.')

    if overrides:
        session.install(*(f'{name}=={version}' for name, version in overrides.items()))

    # Test
    args = ['-m', 'not extra']
    if not overrides:
        args.append('--cov=xorgames')

    session.run('pytest', 'tests/', *args)


@nox.session(python=PYTHON_VERSIONS[-1])
@nox.parametrize('numpy', NUMPY_VERSIONS)
def tests_numpy(session: nox.sessions.Session, numpy):
    """ Test against a specific NumPy version """
    tests(session, overrides={'numpy': numpy})


@nox.session(python=PYTHON_VERSIONS[-1])
@nox.parametrize('pydantic', PYDANTIC_VERSIONS)
def tests_pydantic(session: nox.sessions.Session, pydantic):
    """ Test against a specific Pydantic version """
    tests(session, overrides={'pydantic': pydantic})


# Dev requirements, pinned by poetry.lock
import subprocess

requirements_txt = [
    # Markers after ";" are for pip, not for `session.install()`
    line.split(";", 1)[0].strip()
    for line in subprocess.run(
        ["poetry", "export", "--no-interaction", "--with=dev", "--format=requirements.txt", "--without-hashes"],
        check=True, capture_output=True, text=True,
    ).stdout.splitlines()
    if line.strip()
]
