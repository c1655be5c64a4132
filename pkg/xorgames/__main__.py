from xorgames.cli.main import app

app(prog_name='xorgames')
